#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "sigmasum/poly.hpp"
#include "sigmasum/scalar.hpp"

namespace sigmasum {

/// Default truncation order for series built from expressions.
inline constexpr std::size_t kDefaultOrder = 64;

/// Truncated formal power series: the first `order()` coefficients of an
/// element of K[[sigma]]. Every operation returns the largest order at which
/// its result is still exact.
class Series {
public:
    Series() = default;
    Series(std::initializer_list<Scalar> cs) : c_(cs) {}
    explicit Series(std::vector<Scalar> cs) : c_(std::move(cs)) {}

    static Series zero(std::size_t order) { return Series(std::vector<Scalar>(order, Scalar(0))); }
    /// The polynomial p truncated (or zero padded) to `order` coefficients.
    static Series from_poly(const SigmaPoly& p, std::size_t order);

    std::size_t order() const { return c_.size(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }

    /// Index of the first nonzero coefficient, or order() if none is known.
    std::size_t valuation() const;

    Series truncated(std::size_t order) const;
    /// The known coefficients as a polynomial in sigma.
    SigmaPoly to_poly() const { return SigmaPoly(c_); }

    Series operator-() const;
    friend Series operator+(const Series& x, const Series& y);
    friend Series operator-(const Series& x, const Series& y);
    friend Series operator*(const Series& x, const Series& y);
    friend Series operator*(const Scalar& s, const Series& x);

    /// Equality on the shared prefix min(order(a), order(b)).
    friend bool agree(const Series& a, const Series& b);
    /// Equal orders and equal coefficients.
    friend bool operator==(const Series& a, const Series& b);

private:
    std::vector<Scalar> c_;
};

Series series_add(const Series& x, const Series& y);
Series series_mul(const Series& x, const Series& y);
/// Multiplicative inverse to the same order. Throws NotAUnit when u_0 = 0.
Series series_invert(const Series& u);
Series series_pow(const Series& x, unsigned e);
/// The shift operator applied n times: drops the first n coefficients.
Series shift_left(const Series& x, std::size_t n);
/// x = head + sigma^n * tail with deg head < n.
std::pair<SigmaPoly, Series> head_split(const Series& x, std::size_t n);
/// The unique X with F*X = A mod sigma^order. Throws DenominatorNotUnit if F(0) = 0.
Series series_from_rational(const SigmaPoly& a, const SigmaPoly& f, std::size_t order);
/// sigma^n * x, keeping all known coefficients (order grows by n).
Series shift_right(const Series& x, std::size_t n);

}  // namespace sigmasum
