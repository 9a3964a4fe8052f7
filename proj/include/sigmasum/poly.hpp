#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "sigmasum/scalar.hpp"

namespace sigmasum {

struct SigmaVar {
    static constexpr char symbol = 's';
};
struct ScalarVar {
    static constexpr char symbol = 't';
};

/// Dense univariate polynomial over K, coefficient i multiplies x^i.
/// Trailing zeros are never stored, so the zero polynomial has no coefficients.
template <class Var>
class UPoly {
public:
    UPoly() = default;
    UPoly(std::initializer_list<Scalar> cs) : c_(cs) { trim(); }
    explicit UPoly(std::vector<Scalar> cs) : c_(std::move(cs)) { trim(); }
    UPoly(const Scalar& c) : c_{c} { trim(); }  // NOLINT(google-explicit-constructor)
    UPoly(long c) : UPoly(Scalar(c)) {}         // NOLINT(google-explicit-constructor)
    UPoly(int c) : UPoly(Scalar(c)) {}          // NOLINT(google-explicit-constructor)

    static UPoly monomial(const Scalar& c, std::size_t k) {
        std::vector<Scalar> v(k + 1, Scalar(0));
        v[k] = c;
        return UPoly(std::move(v));
    }
    static UPoly variable() { return monomial(Scalar(1), 1); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
    /// Leading coefficient; zero for the zero polynomial.
    Scalar lead() const { return c_.empty() ? Scalar(0) : c_.back(); }

    Scalar eval(const Scalar& x) const {
        Scalar r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Scalar> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
        return UPoly(std::move(d));
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator*=(const Scalar& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const Scalar& s) { return a *= s; }
    friend UPoly operator*(const Scalar& s, UPoly a) { return a *= s; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    UPoly pow(unsigned e) const {
        UPoly r(1), base = *this;
        while (e) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    /// Divides by the leading coefficient. Throws ZeroPolynomial on zero.
    UPoly monic() const {
        if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "monic of the zero polynomial");
        return *this * lead().inverse();
    }

    /// Euclidean division over K: returns (q, r) with a = q*b + r, deg r < deg b.
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
        if (a.degree() < b.degree()) return {UPoly{}, a};
        std::vector<Scalar> r = a.c_;
        std::vector<Scalar> q(a.c_.size() - b.c_.size() + 1, Scalar(0));
        Scalar inv = b.lead().inverse();
        for (std::size_t k = q.size(); k-- > 0;) {
            Scalar f = r[k + b.c_.size() - 1] * inv;
            q[k] = f;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
        }
        r.resize(b.c_.size() - 1);
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }

    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

    /// Monic gcd; gcd(0, 0) = 0.
    friend UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    bool divides(const UPoly& a) const { return (a % *this).is_zero(); }

    /// a / b when b divides a exactly; throws InvalidArgument otherwise.
    friend UPoly exact_div(const UPoly& a, const UPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
        return q;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

/// Polynomial in sigma with coefficients in K (an element of K[sigma]).
using SigmaPoly = UPoly<SigmaVar>;
/// Polynomial in t with coefficients in K, the codomain of the summation.
using ScalarPolynomial = UPoly<ScalarVar>;

/// 1 - sigma.
inline SigmaPoly one_minus_sigma() { return SigmaPoly{Scalar(1), Scalar(-1)}; }

/// Value of a sigma polynomial at sigma = 1.
inline Scalar add_sum(const SigmaPoly& p) {
    Scalar r(0);
    for (const auto& c : p.coeffs()) r += c;
    return r;
}

}  // namespace sigmasum
