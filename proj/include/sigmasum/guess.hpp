#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sigmasum/annpoly.hpp"
#include "sigmasum/linalg.hpp"
#include "sigmasum/series.hpp"

namespace sigmasum {

/// Search space for annihilator discovery.
struct GuessBounds {
    std::size_t max_t_degree = 2;
    std::size_t max_sigma_degree = 2;
    /// Coefficients used to set up the linear system.
    std::size_t order_used = 32;
    /// Order at which a candidate must still vanish to be returned.
    std::size_t certify_order = 64;

    /// Throws InsufficientOrder unless (dT+1)(ds+1) < order_used <= certify_order.
    void validate() const;
};

/// Rows are the coefficients 0..n-1; column j*(ds+1)+k holds sigma^k x^j.
Matrix<Scalar> relation_matrix(const Series& x, std::size_t dt, std::size_t ds, std::size_t n);
/// Inverse of the column layout of relation_matrix.
AnnPoly relation_polynomial(const std::vector<Scalar>& v, std::size_t dt, std::size_t ds);

/// Smallest (dT, then ds) relation P with P(x) = 0 mod sigma^order_used,
/// normalized (stripped, primitive, squarefree branch) and re-checked at
/// certify_order. Throws InsufficientOrder.
std::optional<AnnPoly> guess_annihilator(const Series& x, const GuessBounds& bounds);

struct Telescope {
    SigmaPoly numerator;    // A
    SigmaPoly denominator;  // F, with F(0) = 1
};

/// Finds F of degree <= max_denominator_degree with F*x a polynomial, using the
/// trailing coefficients; the reduced pair of least degree is returned.
/// Throws InsufficientOrder unless order(x) > 2(max_denominator_degree + 1).
std::optional<Telescope> detect_telescope(const Series& x, std::size_t max_denominator_degree);

/// True iff P(x) vanishes mod sigma^order. Throws InsufficientOrder if x is shorter.
bool certify(const AnnPoly& p, const Series& x, std::size_t order);

}  // namespace sigmasum
