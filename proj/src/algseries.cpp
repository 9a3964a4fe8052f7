#include "sigmasum/algseries.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "sigmasum/guess.hpp"

namespace sigmasum {

namespace {

// x read as an exact polynomial, cut or zero padded to n coefficients.
Series padded(const Series& x, std::size_t n) {
    std::vector<Scalar> c(n, Scalar(0));
    for (std::size_t i = 0; i < std::min(n, x.order()); ++i) c[i] = x[i];
    return Series(std::move(c));
}

bool vanishes(const AnnPoly& p, const Series& x) { return ann_eval_at_series(p, x).valuation() == x.order(); }

// Valuation of P'(x); fails if it is too large for x to pin down a root.
std::size_t derivative_valuation(const AnnPoly& p, const Series& x) {
    const std::size_t v = ann_eval_at_series(p.derivative(), x).valuation();
    if (2 * v >= x.order()) {
        throw Error(ErrorKind::SingularRoot, "P' vanishes to order " + std::to_string(v) + " at a seed of length " +
                                                 std::to_string(x.order()) + "; a longer seed is needed");
    }
    return v;
}

std::vector<SquarefreeFactor> branches(const AnnPoly& prim) {
    std::vector<SquarefreeFactor> fs;
    try {
        fs = squarefree_factors_t(prim);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InseparableFactor) throw;
        fs = {{prim, 1}};
    }
    std::stable_sort(fs.begin(), fs.end(),
                     [](const auto& a, const auto& b) { return a.factor.degree() < b.factor.degree(); });
    return fs;
}

// Splits ann while a relation of lower T-degree is found; a trivial nullspace
// at sigma-degree deg_sigma(ann) rules out every proper factor.
Minimality refine_minimal(AnnPoly& ann, const Series& x) {
    const std::size_t n = x.order();
    for (;;) {
        const long m = ann.degree();
        if (m <= 1) return Minimality::Certified;
        const auto dt = static_cast<std::size_t>(m - 1);
        const auto ds = static_cast<std::size_t>(ann.sigma_degree());
        if ((dt + 1) * (ds + 1) >= n) return Minimality::UpToDivisibility;
        auto basis = nullspace(relation_matrix(x, dt, ds, n));
        if (basis.empty()) return Minimality::Certified;
        bool split = false;
        for (const auto& v : basis) {
            AnnPoly cand = relation_polynomial(v, dt, ds);
            if (cand.degree() < 1) continue;
            AnnPoly g = gcd_t(ann, cand);
            if (g.degree() < 1 || g.degree() >= m) continue;
            AnnPoly h = primitive_part(g).first;
            AnnPoly rest = primitive_part(exact_div(ann, h)).first;
            if (vanishes(h, x)) {
                ann = h;
            } else if (vanishes(rest, x)) {
                ann = rest;
            } else {
                continue;
            }
            split = true;
            break;
        }
        if (!split) return Minimality::UpToDivisibility;
    }
}

}  // namespace

Series newton_lift(const AnnPoly& p, const Series& seed, std::size_t n) {
    const std::size_t len = seed.order();
    if (len == 0) throw Error(ErrorKind::SeedNotRoot, "empty seed");
    if (!vanishes(p, seed)) throw Error(ErrorKind::SeedNotRoot, "seed is not a root of the annihilator");
    const std::size_t v = derivative_valuation(p, seed);
    const AnnPoly dp = p.derivative();

    std::size_t prec = len - v;
    if (n <= prec) return seed.truncated(n);
    Series x = seed;
    while (prec < n) {
        const std::size_t next = std::min(2 * prec - v, n);
        const Series xp = padded(x, next + v);
        const Series r = shift_left(ann_eval_at_series(p, xp), v);
        const Series d = shift_left(ann_eval_at_series(dp, xp), v);
        x = xp.truncated(next) - r * series_invert(d);
        prec = next;
    }
    return x;
}

AlgebraicSeries make_algebraic(const AnnPoly& p, const Series& seed, std::size_t n) {
    auto [stripped, power] = strip_one_minus_sigma(p);
    const AnnPoly prim = primitive_part(stripped).first;

    std::optional<AlgebraicSeries> chosen;
    std::size_t matches = 0;
    std::optional<Error> singular;
    for (const auto& f : branches(prim)) {
        Series x;
        try {
            x = newton_lift(f.factor, seed, std::max(n, seed.order()));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SingularRoot) singular = e;
            if (e.kind() == ErrorKind::SeedNotRoot || e.kind() == ErrorKind::SingularRoot) continue;
            throw;
        }
        ++matches;
        if (chosen) continue;
        AlgebraicSeries a;
        a.ann_ = f.factor;
        a.expansion_ = x.truncated(n);
        a.seed_len_ = std::min(seed.order(), n);
        a.stripped_power_ = power;
        a.multiplicity_ = f.multiplicity;
        chosen = std::move(a);
    }
    if (!chosen) {
        if (singular) throw *singular;
        throw Error(ErrorKind::NoBranchMatches, "no squarefree factor has the seed as a root");
    }
    chosen->ambiguous_ = matches > 1;
    chosen->minimality_ = refine_minimal(chosen->ann_, chosen->expansion_);
    return *chosen;
}

AlgebraicSeries from_relation(const AnnPoly& r, const Series& x) {
    if (r.is_zero()) throw Error(ErrorKind::NoBranchMatches, "relation vanished identically");
    auto [stripped, power] = strip_one_minus_sigma(r);
    const AnnPoly prim = primitive_part(stripped).first;

    std::optional<AlgebraicSeries> chosen;
    std::size_t matches = 0;
    for (const auto& f : branches(prim)) {
        if (f.factor.degree() < 1 || !vanishes(f.factor, x)) continue;
        ++matches;
        if (chosen) continue;
        AlgebraicSeries a;
        a.ann_ = f.factor;
        a.expansion_ = x;
        a.stripped_power_ = power;
        a.multiplicity_ = f.multiplicity;
        chosen = std::move(a);
    }
    if (!chosen) throw Error(ErrorKind::NoBranchMatches, "no squarefree factor annihilates the expansion");
    chosen->ambiguous_ = matches > 1;
    chosen->minimality_ = refine_minimal(chosen->ann_, chosen->expansion_);
    chosen->seed_len_ = 2 * derivative_valuation(chosen->ann_, x) + 1;
    return *chosen;
}

bool verify_annihilation(const AnnPoly& ann, const Series& expansion, std::size_t seed_len, std::size_t n) {
    if (!vanishes(ann, expansion)) return false;
    if (n <= expansion.order()) return true;
    const Series x = newton_lift(ann, expansion.truncated(std::min(seed_len, expansion.order())), n);
    return vanishes(ann, x) && agree(x, expansion);
}

bool verify_annihilation(const AlgebraicSeries& a, std::size_t n) {
    return verify_annihilation(a.ann(), a.expansion(), a.seed_len(), n);
}

}  // namespace sigmasum
