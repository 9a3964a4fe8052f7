#pragma once

#include <cstddef>

#include "sigmasum/algseries.hpp"
#include "sigmasum/annpoly.hpp"

namespace sigmasum {

/// Res_u(f(u), g(T - u)): vanishes at every sum of a root of f and a root of g.
AnnPoly sum_resultant(const AnnPoly& f, const AnnPoly& g);
/// Res_u(f(u), u^n g(T/u)) with n the u-degree: vanishes at every product of roots.
AnnPoly product_resultant(const AnnPoly& f, const AnnPoly& g);

/// A/F expanded to order n, annihilated by F*T - A.
AlgebraicSeries rational_series(const SigmaPoly& a, const SigmaPoly& f, std::size_t n = kDefaultOrder);

AlgebraicSeries ann_sum(const AlgebraicSeries& x, const AlgebraicSeries& y);
AlgebraicSeries ann_product(const AlgebraicSeries& x, const AlgebraicSeries& y);
AlgebraicSeries ann_negate(const AlgebraicSeries& x);
/// Throws NotAUnit.
AlgebraicSeries ann_inverse(const AlgebraicSeries& x);
/// The n-fold left shift. Throws OrderExhausted.
AlgebraicSeries ann_tail_left(const AlgebraicSeries& x, std::size_t n);
/// F + sigma^n Y.
AlgebraicSeries ann_tail_right(const AlgebraicSeries& y, const SigmaPoly& f, std::size_t n);

}  // namespace sigmasum
