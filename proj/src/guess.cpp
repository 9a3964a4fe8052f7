#include "sigmasum/guess.hpp"

#include <algorithm>
#include <string>

namespace sigmasum {

void GuessBounds::validate() const {
    if ((max_t_degree + 1) * (max_sigma_degree + 1) >= order_used) {
        throw Error(ErrorKind::InsufficientOrder, "guess bounds need (dT+1)(ds+1) < order_used (" +
                                                      std::to_string(order_used) + ")");
    }
    if (certify_order < order_used) {
        throw Error(ErrorKind::InsufficientOrder, "certify_order must be at least order_used");
    }
}

Matrix<Scalar> relation_matrix(const Series& x, std::size_t dt, std::size_t ds, std::size_t n) {
    const std::size_t cols = (dt + 1) * (ds + 1);
    Matrix<Scalar> m(n, cols, Scalar(0));
    Series xn = x.truncated(n);
    Series power = Series::from_poly(SigmaPoly(1), n);
    for (std::size_t j = 0; j <= dt; ++j) {
        for (std::size_t k = 0; k <= ds; ++k)
            for (std::size_t i = k; i < n; ++i) m(i, j * (ds + 1) + k) = power[i - k];
        if (j < dt) power = power * xn;
    }
    return m;
}

AnnPoly relation_polynomial(const std::vector<Scalar>& v, std::size_t dt, std::size_t ds) {
    std::vector<SigmaPoly> c(dt + 1);
    for (std::size_t j = 0; j <= dt; ++j) {
        std::vector<Scalar> s(v.begin() + static_cast<std::ptrdiff_t>(j * (ds + 1)),
                              v.begin() + static_cast<std::ptrdiff_t>((j + 1) * (ds + 1)));
        c[j] = SigmaPoly(std::move(s));
    }
    return AnnPoly(std::move(c));
}

bool certify(const AnnPoly& p, const Series& x, std::size_t order) {
    if (x.order() < order) {
        throw Error(ErrorKind::InsufficientOrder, "certification needs " + std::to_string(order) +
                                                      " coefficients, stream has " + std::to_string(x.order()));
    }
    return ann_eval_at_series(p, x.truncated(order)).valuation() == order;
}

namespace {

// Stripped, primitive, and reduced to the squarefree factor vanishing on x.
AnnPoly normalize_relation(const AnnPoly& p, const Series& x) {
    AnnPoly q = primitive_part(strip_one_minus_sigma(p).first).first;
    std::vector<SquarefreeFactor> factors;
    try {
        factors = squarefree_factors_t(q);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InseparableFactor) throw;
        return q;
    }
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.factor.degree() < b.factor.degree(); });
    for (const auto& f : factors)
        if (ann_eval_at_series(f.factor, x).valuation() == x.order()) return f.factor;
    return q;
}

}  // namespace

std::optional<AnnPoly> guess_annihilator(const Series& x, const GuessBounds& bounds) {
    bounds.validate();
    if (x.order() < bounds.order_used) {
        throw Error(ErrorKind::InsufficientOrder, "stream shorter than order_used");
    }
    if (x.order() < bounds.certify_order) {
        throw Error(ErrorKind::InsufficientOrder, "stream shorter than certify_order");
    }
    const Series head = x.truncated(bounds.order_used);
    for (std::size_t dt = 1; dt <= bounds.max_t_degree; ++dt) {
        for (std::size_t ds = 0; ds <= bounds.max_sigma_degree; ++ds) {
            if ((dt + 1) * (ds + 1) >= bounds.order_used) continue;
            auto basis = nullspace(relation_matrix(head, dt, ds, bounds.order_used));
            for (const auto& v : basis) {
                AnnPoly p = relation_polynomial(v, dt, ds);
                if (p.degree() < 1) continue;
                AnnPoly q = normalize_relation(p, head);
                if (certify(q, x, bounds.certify_order)) return q;
            }
        }
    }
    return std::nullopt;
}

namespace {

bool lex_less(const SigmaPoly& a, const SigmaPoly& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        Scalar x = a[i], y = b[i];
        if (x == y) continue;
        if (x.characteristic() != 0 || y.characteristic() != 0) return x.in(a.lead().field()).residue() < y.in(a.lead().field()).residue();
        return x.rational() < y.rational();
    }
    return false;
}

}  // namespace

std::optional<Telescope> detect_telescope(const Series& x, std::size_t max_denominator_degree) {
    const std::size_t n = x.order();
    const std::size_t df = max_denominator_degree;
    if (n <= 2 * (df + 1)) {
        throw Error(ErrorKind::InsufficientOrder, "telescope detection needs more than 2(dF+1) coefficients");
    }
    for (std::size_t d = 0;; ++d) {
        const std::size_t fdeg = std::min(d, df);
        const std::size_t unknowns = fdeg + 1;
        if (n < d + 1 + unknowns + df + 1) break;
        const std::size_t eqs = n - 1 - d;
        Matrix<Scalar> m(eqs, unknowns, Scalar(0));
        for (std::size_t r = 0; r < eqs; ++r)
            for (std::size_t k = 0; k < unknowns; ++k) m(r, k) = x[d + 1 + r - k];
        auto basis = nullspace(m);
        std::optional<SigmaPoly> best;
        for (const auto& v : basis) {
            SigmaPoly f(v);
            if (f[0].is_zero()) continue;
            f = f * f[0].inverse();
            if (!best || lex_less(f, *best)) best = f;
        }
        if (!best) continue;
        SigmaPoly a = (Series::from_poly(*best, n) * x).truncated(d + 1).to_poly();
        return Telescope{a, *best};
    }
    return std::nullopt;
}

}  // namespace sigmasum
