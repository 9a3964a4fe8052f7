#include "sigmasum/annpoly.hpp"

#include <algorithm>
#include <random>

namespace sigmasum {

AnnPoly AnnPoly::monomial(const SigmaPoly& c, std::size_t k) {
    std::vector<SigmaPoly> v(k + 1);
    v[k] = c;
    return AnnPoly(std::move(v));
}

long AnnPoly::sigma_degree() const {
    long d = -1;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

AnnPoly AnnPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<SigmaPoly> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
    return AnnPoly(std::move(d));
}

AnnPoly AnnPoly::operator-() const {
    AnnPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

AnnPoly& AnnPoly::operator+=(const AnnPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

AnnPoly& AnnPoly::operator-=(const AnnPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

AnnPoly operator*(const AnnPoly& a, const AnnPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<SigmaPoly> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return AnnPoly(std::move(r));
}

AnnPoly operator*(const SigmaPoly& s, const AnnPoly& a) {
    std::vector<SigmaPoly> r(a.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = s * a.c_[k];
    return AnnPoly(std::move(r));
}

AnnPoly AnnPoly::pow(unsigned e) const {
    AnnPoly r(SigmaPoly(1)), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Series ann_eval_at_series(const AnnPoly& p, const Series& x) {
    std::size_t n = x.order();
    Series acc = Series::zero(n);
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * x + Series::from_poly(p[k], n);
    }
    return acc;
}

ScalarPolynomial apply_add(const AnnPoly& p) {
    std::vector<Scalar> c;
    c.reserve(p.size());
    for (const auto& pk : p.coeffs()) c.push_back(add_sum(pk));
    return ScalarPolynomial(std::move(c));
}

std::pair<AnnPoly, SigmaPoly> primitive_part(const AnnPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "primitive part of the zero polynomial");
    SigmaPoly g;
    for (const auto& c : p.coeffs()) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    // Scale so the leading T-coefficient of the primitive part is monic in sigma.
    Scalar lc = p.lead().lead() / g.lead();
    SigmaPoly content = g * lc;
    return {exact_div(p, content), content};
}

std::pair<AnnPoly, std::size_t> strip_one_minus_sigma(const AnnPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "strip of the zero polynomial");
    AnnPoly r = p;
    std::size_t n = 0;
    const SigmaPoly f = one_minus_sigma();
    while (apply_add(r).is_zero()) {
        r = exact_div(r, f);
        ++n;
    }
    return {r, n};
}

AnnPoly reflected(const AnnPoly& p) {
    std::vector<SigmaPoly> c(p.coeffs().rbegin(), p.coeffs().rend());
    return AnnPoly(std::move(c));
}

AnnPoly compose_affine(const AnnPoly& p, const SigmaPoly& f, std::size_t n) {
    AnnPoly lin = AnnPoly(f) + AnnPoly::monomial(SigmaPoly::monomial(Scalar(1), n), 1);
    AnnPoly acc;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * lin + AnnPoly(p[k]);
    return acc;
}

AnnPoly prepend_head(const AnnPoly& q, const SigmaPoly& f, std::size_t n) {
    if (q.is_zero()) return {};
    const AnnPoly shifted = AnnPoly{-f, SigmaPoly(1)};
    const auto m = static_cast<std::size_t>(q.degree());
    AnnPoly acc, power(SigmaPoly(1));
    for (std::size_t j = 0; j <= m; ++j) {
        acc += SigmaPoly::monomial(Scalar(1), n * (m - j)) * q[j] * power;
        power = power * shifted;
    }
    return acc;
}

AnnPoly negate_variable(const AnnPoly& p) {
    std::vector<SigmaPoly> c = p.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return AnnPoly(std::move(c));
}

AnnPoly exact_div(const AnnPoly& p, const SigmaPoly& c) {
    std::vector<SigmaPoly> r;
    r.reserve(p.size());
    for (const auto& pk : p.coeffs()) r.push_back(exact_div(pk, c));
    return AnnPoly(std::move(r));
}

AnnPoly exact_div(const AnnPoly& a, const AnnPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    std::vector<SigmaPoly> r = a.coeffs();
    std::vector<SigmaPoly> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const SigmaPoly lb = b.lead();
    const std::size_t nb = b.size();
    for (std::size_t k = q.size(); k-- > 0;) {
        SigmaPoly f = exact_div(r[k + nb - 1], lb);
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < nb; ++j) r[k + j] -= f * b[j];
        q[k] = std::move(f);
    }
    for (std::size_t j = 0; j + 1 < nb; ++j)
        if (!r[j].is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    return AnnPoly(std::move(q));
}

AnnPoly pseudo_rem(const AnnPoly& a, const AnnPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "pseudo-remainder by the zero polynomial");
    AnnPoly r = a;
    const SigmaPoly lb = b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        r = lb * r - AnnPoly::monomial(r.lead(), shift) * b;
    }
    return r;
}

AnnPoly gcd_t(const AnnPoly& a, const AnnPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return primitive_part(b).first;
    if (b.is_zero()) return primitive_part(a).first;
    AnnPoly x = primitive_part(a).first, y = primitive_part(b).first;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) return AnnPoly(SigmaPoly(1));
        AnnPoly r = pseudo_rem(x, y);
        x = std::move(y);
        y = r.is_zero() ? AnnPoly{} : primitive_part(r).first;
    }
    return x;
}

bool associated(const AnnPoly& a, const AnnPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return primitive_part(a).first == primitive_part(b).first;
}

std::vector<SquarefreeFactor> squarefree_factors_t(const AnnPoly& p) {
    AnnPoly prim = primitive_part(p).first;
    std::vector<SquarefreeFactor> out;
    if (prim.degree() <= 0) return out;

    AnnPoly d = prim.derivative();
    if (d.is_zero()) throw Error(ErrorKind::InseparableFactor, "T-derivative vanishes identically");

    AnnPoly a = gcd_t(prim, d);
    AnnPoly b = exact_div(prim, a);
    AnnPoly c = exact_div(d, a);
    AnnPoly e = c - b.derivative();
    for (std::size_t i = 1; b.degree() > 0; ++i) {
        AnnPoly g = gcd_t(b, e);
        if (g.degree() > 0) out.push_back({g, i});
        AnnPoly nb = exact_div(b, g);
        AnnPoly nc = exact_div(e, g);
        e = nc - nb.derivative();
        b = std::move(nb);
        if (i > static_cast<std::size_t>(prim.degree())) break;
    }

    AnnPoly product(SigmaPoly(1));
    for (const auto& f : out) {
        if (f.factor.derivative().is_zero()) {
            throw Error(ErrorKind::InseparableFactor, "squarefree factor with vanishing T-derivative");
        }
        product = product * f.factor.pow(static_cast<unsigned>(f.multiplicity));
    }
    if (!associated(product, prim) || product.degree() != prim.degree()) {
        throw Error(ErrorKind::InseparableFactor, "squarefree decomposition failed (inseparable factor in characteristic p)");
    }
    return out;
}

ScalarPolynomial monic(const ScalarPolynomial& s) {
    if (s.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "monic of the zero polynomial");
    return s.monic();
}

std::optional<LinearPower> is_linear_power(const ScalarPolynomial& s) {
    if (s.degree() < 1 || !s.lead().is_one()) {
        throw Error(ErrorKind::NotMonic, "linear-power test needs a monic nonconstant polynomial");
    }
    const auto m = static_cast<std::size_t>(s.degree());
    const std::uint64_t p = s.lead().characteristic();
    // Largest power q = p^mu dividing m; (t - b)^m = (t^q - b)^(m/q) since b^p = b in F_p.
    std::size_t q = 1;
    if (p != 0) {
        while (m % (q * p) == 0) q *= p;
    }
    const std::size_t mp = m / q;
    Scalar root = -s[q * (mp - 1)] / Scalar(static_cast<long>(mp));
    ScalarPolynomial lin{-root, Scalar(1)};
    if (lin.pow(static_cast<unsigned>(m)) == s) return LinearPower{root, m};
    return std::nullopt;
}

namespace {

// Divisors of |n| (n != 0), or nothing if n has a large composite cofactor.
std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<std::pair<mpz_class, unsigned>> fac;
    constexpr unsigned long kTrialBound = 1'000'000;
    for (unsigned long d = 2; d <= kTrialBound && d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
                ++e;
            }
            fac.emplace_back(mpz_class(d), e);
        }
    }
    if (n > 1) {
        mpz_class bound(kTrialBound);
        if (n > bound * bound && mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) return std::nullopt;
        fac.emplace_back(n, 1);
    }
    std::vector<mpz_class> out{mpz_class(1)};
    for (const auto& [prime, e] : fac) {
        std::size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

// Repeatedly divides s by (t - r) while it divides; returns the multiplicity.
std::size_t divide_out(ScalarPolynomial& s, const Scalar& r) {
    ScalarPolynomial lin{-r, Scalar(1)};
    std::size_t mult = 0;
    while (s.degree() >= 1) {
        auto [q, rem] = divmod(s, lin);
        if (!rem.is_zero()) break;
        s = std::move(q);
        ++mult;
    }
    return mult;
}

ScalarPolynomial powmod(ScalarPolynomial base, mpz_class e, const ScalarPolynomial& m) {
    ScalarPolynomial r = ScalarPolynomial(Scalar(1)) % m;
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % m;
        e >>= 1;
        if (e > 0) base = (base * base) % m;
    }
    return r;
}

// Roots of a squarefree product of distinct linear factors over F_p (Cantor-Zassenhaus).
void split_linear(const ScalarPolynomial& g, std::uint64_t p, std::mt19937_64& rng, std::vector<Scalar>& roots) {
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        roots.push_back(-g[0] / g[1]);
        return;
    }
    const Field f = Field::prime(p);
    mpz_class half = (mpz_class(static_cast<unsigned long>(p)) - 1) / 2;
    for (;;) {
        Scalar a = Scalar::modular(mpz_class(static_cast<unsigned long>(rng() % p)), p);
        ScalarPolynomial h = powmod(ScalarPolynomial{a, Scalar(1).in(f)}, half, g) - ScalarPolynomial(Scalar(1).in(f));
        ScalarPolynomial d = gcd(g, h);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear(d, p, rng, roots);
            split_linear(exact_div(g, d), p, rng, roots);
            return;
        }
    }
}

}  // namespace

RootReport rational_roots(const ScalarPolynomial& s) {
    if (s.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
    RootReport rep;
    ScalarPolynomial rest = s.monic();
    const std::uint64_t p = rest.lead().characteristic();

    auto record = [&](const Scalar& r) {
        std::size_t m = divide_out(rest, r);
        if (m > 0) rep.roots.push_back({r, m});
    };

    if (rest.degree() >= 1 && rest[0].is_zero()) record(p == 0 ? Scalar(0) : Scalar(0).in(rest.lead().field()));

    if (p != 0) {
        constexpr std::uint64_t kScanLimit = 1u << 16;
        if (p <= kScanLimit || p == 2) {
            for (std::uint64_t x = 1; x < p && rest.degree() >= 1; ++x) record(Scalar::modular(mpz_class(static_cast<unsigned long>(x)), p));
        } else if (rest.degree() >= 1) {
            ScalarPolynomial t = ScalarPolynomial::monomial(Scalar(1).in(rest.lead().field()), 1);
            ScalarPolynomial g = gcd(rest, powmod(t, mpz_class(static_cast<unsigned long>(p)), rest) - t);
            std::vector<Scalar> roots;
            std::mt19937_64 rng(0x5eed);
            split_linear(g, p, rng, roots);
            std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); });
            for (const auto& r : roots) record(r);
        }
        rep.cofactor = rest;
        return rep;
    }

    if (rest.degree() >= 1) {
        // Integer primitive form for the rational-root test.
        mpz_class den = 1;
        for (const auto& c : rest.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
        mpz_class a0 = mpq_class(rest[0].rational() * den).get_num();
        mpz_class an = den;
        auto num_divs = divisors(a0);
        auto den_divs = divisors(an);
        if (!num_divs || !den_divs) {
            rep.complete = false;
        } else {
            std::vector<mpq_class> cands;
            for (const auto& a : *num_divs)
                for (const auto& b : *den_divs) {
                    mpq_class c(a, b);
                    c.canonicalize();
                    cands.push_back(c);
                    cands.push_back(-c);
                }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (const auto& c : cands) {
                if (rest.degree() < 1) break;
                Scalar r(c);
                if (rest.eval(r).is_zero()) record(r);
            }
        }
    }
    rep.cofactor = rest;
    return rep;
}

}  // namespace sigmasum
