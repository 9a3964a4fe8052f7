#include "sigmasum/closure.hpp"

#include "sigmasum/linalg.hpp"

namespace sigmasum {

namespace {

// Polynomial in the auxiliary variable u; entry i multiplies u^i.
using UPolyOverAnn = std::vector<AnnPoly>;

void trim(UPolyOverAnn& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

AnnPoly resultant(UPolyOverAnn a, UPolyOverAnn b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return {};
    const std::size_t m = a.size() - 1, n = b.size() - 1;
    const std::size_t size = m + n;
    if (size == 0) return AnnPoly(SigmaPoly(1));
    Matrix<AnnPoly> s(size, size);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = a[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = b[n - k];
    return bareiss_determinant(std::move(s));
}

UPolyOverAnn constant_in_t(const AnnPoly& f) {
    UPolyOverAnn r;
    for (const auto& c : f.coeffs()) r.emplace_back(c);
    return r;
}

Scalar binomial(std::size_t n, std::size_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(mpq_class(b));
}

}  // namespace

AnnPoly sum_resultant(const AnnPoly& f, const AnnPoly& g) {
    // g(T - u) = sum_j g_j sum_i C(j, i) T^{j-i} (-u)^i
    UPolyOverAnn b(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            Scalar c = binomial(j, i);
            if (i % 2) c = -c;
            b[i] += AnnPoly::monomial(g[j] * c, j - i);
        }
    }
    return resultant(constant_in_t(f), std::move(b));
}

AnnPoly product_resultant(const AnnPoly& f, const AnnPoly& g) {
    // u^n g(T/u) = sum_j g_j T^j u^{n-j}
    const std::size_t n = g.size() - 1;
    UPolyOverAnn b(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) b[n - j] = AnnPoly::monomial(g[j], j);
    return resultant(constant_in_t(f), std::move(b));
}

AlgebraicSeries rational_series(const SigmaPoly& a, const SigmaPoly& f, std::size_t n) {
    const Series x = series_from_rational(a, f, n);
    return from_relation(AnnPoly{-a, f}, x);
}

AlgebraicSeries ann_sum(const AlgebraicSeries& x, const AlgebraicSeries& y) {
    return from_relation(sum_resultant(x.ann(), y.ann()), x.expansion() + y.expansion());
}

AlgebraicSeries ann_product(const AlgebraicSeries& x, const AlgebraicSeries& y) {
    return from_relation(product_resultant(x.ann(), y.ann()), x.expansion() * y.expansion());
}

AlgebraicSeries ann_negate(const AlgebraicSeries& x) {
    return from_relation(negate_variable(x.ann()), -x.expansion());
}

AlgebraicSeries ann_inverse(const AlgebraicSeries& x) {
    const Series inv = series_invert(x.expansion());
    return from_relation(reflected(x.ann()), inv);
}

AlgebraicSeries ann_tail_left(const AlgebraicSeries& x, std::size_t n) {
    auto [head, tail] = head_split(x.expansion(), n);
    return from_relation(compose_affine(x.ann(), head, n), tail);
}

AlgebraicSeries ann_tail_right(const AlgebraicSeries& y, const SigmaPoly& f, std::size_t n) {
    const Series x = Series::from_poly(f, y.certified_order() + n) + shift_right(y.expansion(), n);
    return from_relation(prepend_head(y.ann(), f, n), x);
}

}  // namespace sigmasum
