#pragma once

#include <cstddef>

#include "sigmasum/annpoly.hpp"
#include "sigmasum/series.hpp"

namespace sigmasum {

/// Whether ann is known to be the minimal polynomial of the expansion.
enum class Minimality {
    Certified,
    /// No proper factor was found, but none was ruled out either; scalar
    /// polynomials derived from ann are then correct up to divisibility.
    UpToDivisibility,
};

/// An annihilator together with an expansion it kills to certified_order.
/// The annihilator is primitive, carries no (1 - sigma) factor, and is the
/// squarefree branch the expansion lies on.
class AlgebraicSeries {
public:
    const AnnPoly& ann() const { return ann_; }
    const Series& expansion() const { return expansion_; }
    /// The first seed_len coefficients determine the expansion through ann.
    std::size_t seed_len() const { return seed_len_; }
    Series seed() const { return expansion_.truncated(seed_len_); }
    std::size_t certified_order() const { return expansion_.order(); }
    /// Power of (1 - sigma) removed from the relation this was built from.
    std::size_t stripped_power() const { return stripped_power_; }
    /// Multiplicity of ann in the squarefree decomposition of that relation.
    std::size_t multiplicity() const { return multiplicity_; }
    Minimality minimality() const { return minimality_; }
    /// More than one squarefree factor was consistent with the data.
    bool ambiguous() const { return ambiguous_; }

private:
    friend AlgebraicSeries make_algebraic(const AnnPoly&, const Series&, std::size_t);
    friend AlgebraicSeries from_relation(const AnnPoly&, const Series&);

    AnnPoly ann_;
    Series expansion_;
    std::size_t seed_len_ = 0;
    std::size_t stripped_power_ = 0;
    std::size_t multiplicity_ = 1;
    Minimality minimality_ = Minimality::UpToDivisibility;
    bool ambiguous_ = false;
};

/// Extends seed to the root of P known to order n. The seed must satisfy
/// P(seed) = 0 mod sigma^len and v = val P'(seed) with 2v < len; the first
/// len - v coefficients then single out one root.
/// Throws SeedNotRoot or SingularRoot.
Series newton_lift(const AnnPoly& p, const Series& seed, std::size_t n);

/// Normalizes P, picks the squarefree factor the seed lifts through (lowest
/// T-degree first), and lifts to order n. Throws NoBranchMatches, SingularRoot,
/// or ZeroPolynomial.
AlgebraicSeries make_algebraic(const AnnPoly& p, const Series& seed, std::size_t n = kDefaultOrder);

/// Pairs an exactly known expansion with the factor of R that annihilates it
/// to order(x). Throws NoBranchMatches, SingularRoot, or ZeroPolynomial.
AlgebraicSeries from_relation(const AnnPoly& r, const Series& x);

/// Re-lifts from the seed to order n and checks that the residual vanishes
/// and the known coefficients are reproduced. Throws SingularRoot.
bool verify_annihilation(const AlgebraicSeries& a, std::size_t n);

/// Same check for an arbitrary (ann, expansion) pair, e.g. a tampered one.
bool verify_annihilation(const AnnPoly& ann, const Series& expansion, std::size_t seed_len, std::size_t n);

}  // namespace sigmasum
