#pragma once

// Shared helpers for the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sigmasum/addsum.hpp"
#include "sigmasum/algseries.hpp"
#include "sigmasum/annpoly.hpp"
#include "sigmasum/closure.hpp"
#include "sigmasum/expr.hpp"
#include "sigmasum/render.hpp"

namespace sigmasum::test {

inline Scalar q(long num, long den = 1) { return Scalar(num, den); }

inline Series series(std::initializer_list<Scalar> c) { return Series(c); }

inline AnnPoly ann(const std::string& text, Field f = Field::rationals()) { return parse_annpoly(text, f); }

inline SigmaPoly sig(const std::string& text, Field f = Field::rationals()) {
    AnnPoly p = parse_annpoly(text, f);
    return p.degree() <= 0 ? p[0] : throw Error(ErrorKind::InvalidArgument, "not a polynomial in s: " + text);
}

inline ScalarPolynomial tpoly(std::initializer_list<Scalar> ascending) { return ScalarPolynomial(ascending); }

inline AlgebraicSeries eval(const std::string& text, std::size_t order = kDefaultOrder,
                            Field f = Field::rationals()) {
    return evaluate(parse_expr(text), {f, order});
}

/// Deterministic generator of small random objects.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Scalar scalar(long bound = 5, long max_den = 3) {
        return Scalar(integer(-bound, bound), integer(1, max_den));
    }
    Scalar nonzero(long bound = 5, long max_den = 3) {
        for (;;) {
            Scalar s = scalar(bound, max_den);
            if (!s.is_zero()) return s;
        }
    }

    SigmaPoly sigma_poly(long max_degree, long bound = 5) {
        std::vector<Scalar> c;
        const long d = integer(0, max_degree);
        for (long i = 0; i <= d; ++i) c.push_back(scalar(bound));
        return SigmaPoly(std::move(c));
    }

    /// Random polynomial with F(0) != 0.
    SigmaPoly unit_poly(long max_degree, long bound = 5) {
        for (;;) {
            SigmaPoly p = sigma_poly(max_degree, bound);
            if (!p[0].is_zero()) return p;
        }
    }

    /// Random element of K[s][T] with the given T-degree.
    AnnPoly ann_poly(long t_degree, long s_degree) {
        std::vector<SigmaPoly> c;
        for (long k = 0; k <= t_degree; ++k) c.push_back(sigma_poly(s_degree));
        while (c.back().is_zero()) c.back() = sigma_poly(s_degree);
        return AnnPoly(std::move(c));
    }

    Series stream(std::size_t n, long bound = 9) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < n; ++i) c.push_back(scalar(bound));
        return Series(std::move(c));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// A random rational or quadratic algebraic series; all of them are
/// absolutely algebraic (rational with F(1) != 0, or sqrt(c^2 + s*E) whose
/// scalar degree equals its T-degree).
inline AlgebraicSeries random_absolute(Gen& g, std::size_t order = kDefaultOrder) {
    if (g.integer(0, 1) == 0) {
        for (;;) {
            SigmaPoly f = g.unit_poly(3);
            if (add_sum(f).is_zero()) continue;
            return rational_series(g.sigma_poly(3), f, order);
        }
    }
    for (;;) {
        const Scalar c = g.nonzero(4, 2);
        SigmaPoly d = SigmaPoly(c * c) + SigmaPoly::variable() * g.sigma_poly(2);
        const Scalar d1 = add_sum(d);
        if (d1.is_zero()) continue;
        AnnPoly p{-d, SigmaPoly(0), SigmaPoly(1)};
        AlgebraicSeries a = make_algebraic(p, Series{c}, order);
        if (a.ann().degree() == 2) return a;
    }
}

/// A random series from a small pool of constructions, used where any kind
/// of algebraic series will do.
inline AlgebraicSeries random_algebraic(Gen& g, std::size_t order = kDefaultOrder) {
    switch (g.integer(0, 3)) {
        case 0: return rational_series(g.sigma_poly(3), g.unit_poly(3), order);
        case 1: return random_absolute(g, order);
        case 2: {
            // (1 - a s)^(1/2) or its inverse: practically zero / infinite when a = 1
            const Scalar a = g.integer(0, 2) == 0 ? Scalar(1) : g.nonzero(3, 1);
            AlgebraicSeries x = make_algebraic(AnnPoly{SigmaPoly{Scalar(-1), a}, SigmaPoly(0), SigmaPoly(1)},
                                               Series{Scalar(1)}, order);
            return g.integer(0, 1) ? ann_inverse(x) : x;
        }
        default: {
            const Scalar c = g.nonzero(3, 1);
            // (s-1)T^2 + T - (s + s^2) shifted by a constant: not absolutely algebraic
            AlgebraicSeries y = make_algebraic(ann("(s-1)*T^2+T-(s+s^2)"), Series{Scalar(1)}, order);
            return ann_tail_right(y, SigmaPoly(c), 0);
        }
    }
}

}  // namespace sigmasum::test
