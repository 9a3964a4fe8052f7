#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "sigmasum/algseries.hpp"
#include "sigmasum/annpoly.hpp"

namespace sigmasum {

enum class SeriesClass {
    Algebraic,
    Infinite,
    /// No annihilator is known; transcendence is never claimed.
    NoRelationKnown,
};

std::string_view to_string(SeriesClass c);

struct Classification {
    SeriesClass kind = SeriesClass::NoRelationKnown;
    /// Empty when no relation is known; the constant 1 when Infinite.
    ScalarPolynomial scalar_poly;
    std::size_t sum_degree = 0;
    std::size_t scalar_degree = 0;
    std::optional<LinearPower> univalent;
    std::optional<bool> absolutely_algebraic;
    std::optional<bool> practically_zero;
};

enum class SumStatus { Summed, NotUnivalent, NotAbsolutelyAlgebraic, Infinite, NoRelationKnown };

std::string_view to_string(SumStatus s);

/// Everything needed to re-check a result independently.
struct Certificate {
    AnnPoly annihilator;
    ScalarPolynomial scalar_poly;
    std::size_t stripped_power = 0;
    std::size_t certified_order = 0;
    Minimality minimality = Minimality::UpToDivisibility;
};

struct SumResult {
    std::optional<Scalar> value;
    SumStatus status = SumStatus::NoRelationKnown;
    Certificate certificate;
};

/// monic(apply_add(ann)); never zero.
ScalarPolynomial scalar_polynomial(const AlgebraicSeries& a);

Classification classify(const AlgebraicSeries& a);

/// Whether X stays algebraic under every extension of the summation: the
/// annihilator of the inverse of U (X itself if a unit, else 1 - s + s^2 X)
/// must have a scalar polynomial that does not vanish at 0.
bool absolutely_algebraic(const AlgebraicSeries& a);

/// True iff the T-degree of ann equals the scalar degree; implies absolute algebraicity.
bool degree_sufficiency(const AlgebraicSeries& a);

/// The univalent extension: the unique root of the scalar polynomial when X is
/// absolutely algebraic and univalent; otherwise the status names the obstacle.
SumResult univalent_sum(const AlgebraicSeries& a);

/// Sum of A/F by telescoping: common (1 - s) factors removed, then A(1)/F(1).
/// Throws TelescopeDegenerate if the reduced F(1) is zero, ZeroPolynomial if F is.
Scalar telescope_eval(const SigmaPoly& a, const SigmaPoly& f);

/// Roots in K of the scalar polynomial, the candidate sums.
RootReport zeroes(const AlgebraicSeries& a);

Certificate certificate_of(const AlgebraicSeries& a);

}  // namespace sigmasum
