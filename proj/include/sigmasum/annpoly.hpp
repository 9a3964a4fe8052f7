#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "sigmasum/poly.hpp"
#include "sigmasum/series.hpp"

namespace sigmasum {

/// Polynomial in T with coefficients in K[sigma]; coefficient k multiplies T^k.
/// Annihilators of series live here.
class AnnPoly {
public:
    AnnPoly() = default;
    AnnPoly(std::initializer_list<SigmaPoly> cs) : c_(cs) { trim(); }
    explicit AnnPoly(std::vector<SigmaPoly> cs) : c_(std::move(cs)) { trim(); }
    AnnPoly(const SigmaPoly& c) : c_{c} { trim(); }  // NOLINT(google-explicit-constructor)

    /// c * T^k.
    static AnnPoly monomial(const SigmaPoly& c, std::size_t k);
    static AnnPoly t() { return monomial(SigmaPoly(1), 1); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    long sigma_degree() const;
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<SigmaPoly>& coeffs() const { return c_; }
    SigmaPoly operator[](std::size_t k) const { return k < c_.size() ? c_[k] : SigmaPoly{}; }
    SigmaPoly lead() const { return c_.empty() ? SigmaPoly{} : c_.back(); }

    AnnPoly derivative() const;

    AnnPoly operator-() const;
    AnnPoly& operator+=(const AnnPoly& o);
    AnnPoly& operator-=(const AnnPoly& o);
    friend AnnPoly operator+(AnnPoly a, const AnnPoly& b) { return a += b; }
    friend AnnPoly operator-(AnnPoly a, const AnnPoly& b) { return a -= b; }
    friend AnnPoly operator*(const AnnPoly& a, const AnnPoly& b);
    friend AnnPoly operator*(const SigmaPoly& s, const AnnPoly& a);
    friend bool operator==(const AnnPoly& a, const AnnPoly& b) { return a.c_ == b.c_; }

    AnnPoly pow(unsigned e) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<SigmaPoly> c_;
};

/// Horner evaluation sum_k P_k x^k truncated to order(x).
Series ann_eval_at_series(const AnnPoly& p, const Series& x);

/// Coefficient-wise sigma -> 1: the image of P under the base summation.
ScalarPolynomial apply_add(const AnnPoly& p);

/// gcd over K[sigma] of the T-coefficients, scaled so that the primitive part's
/// leading T-coefficient is monic in sigma. Returns (primitive, content) with
/// p = content * primitive. Throws ZeroPolynomial.
std::pair<AnnPoly, SigmaPoly> primitive_part(const AnnPoly& p);

/// Divides out the largest power (1 - sigma)^n; returns (P', n). Throws ZeroPolynomial.
std::pair<AnnPoly, std::size_t> strip_one_minus_sigma(const AnnPoly& p);

/// T^m P(1/T) with m = deg_T P; zero maps to zero.
AnnPoly reflected(const AnnPoly& p);

/// P(F + sigma^n T).
AnnPoly compose_affine(const AnnPoly& p, const SigmaPoly& f, std::size_t n);

/// sum_j sigma^{n(m-j)} Q_j (T - F)^j with m = deg_T Q: annihilates F + sigma^n Y
/// whenever Q annihilates Y.
AnnPoly prepend_head(const AnnPoly& q, const SigmaPoly& f, std::size_t n);

/// P(-T).
AnnPoly negate_variable(const AnnPoly& p);

/// Exact quotient of every T-coefficient by c; throws InvalidArgument if inexact.
AnnPoly exact_div(const AnnPoly& p, const SigmaPoly& c);
/// Exact quotient in K[sigma][T]; throws InvalidArgument if b does not divide a.
AnnPoly exact_div(const AnnPoly& a, const AnnPoly& b);
/// Pseudo-remainder of a by b.
AnnPoly pseudo_rem(const AnnPoly& a, const AnnPoly& b);
/// Primitive gcd over K(sigma)[T]; a unit (the constant 1) when coprime.
AnnPoly gcd_t(const AnnPoly& a, const AnnPoly& b);
/// Same polynomial up to a nonzero factor from K(sigma).
bool associated(const AnnPoly& a, const AnnPoly& b);

struct SquarefreeFactor {
    AnnPoly factor;
    std::size_t multiplicity;
};

/// Squarefree decomposition over K(sigma); factors are primitive. The product
/// of factor^multiplicity is the primitive part of p. Throws ZeroPolynomial,
/// or InseparableFactor in characteristic p when the decomposition fails.
std::vector<SquarefreeFactor> squarefree_factors_t(const AnnPoly& p);

/// Divides by the leading coefficient; nonzero constants give 1. Throws ZeroPolynomial.
ScalarPolynomial monic(const ScalarPolynomial& s);

struct LinearPower {
    Scalar root;
    std::size_t multiplicity;
};

/// If s = (t - root)^m returns (root, m); nothing when s has two distinct roots
/// over the algebraic closure. Throws NotMonic on non-monic or constant input.
std::optional<LinearPower> is_linear_power(const ScalarPolynomial& s);

struct RootReport {
    struct Root {
        Scalar value;
        std::size_t multiplicity;
    };
    std::vector<Root> roots;
    /// Monic product of the factors without roots in K.
    ScalarPolynomial cofactor;
    /// False when the rational-root search had to give up (coefficients too
    /// large to factor); the cofactor may then still hold roots in K.
    bool complete = true;
};

/// All roots in K with multiplicities; what is left is returned unfactored.
RootReport rational_roots(const ScalarPolynomial& s);

}  // namespace sigmasum
