#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sigmasum/error.hpp"

namespace sigmasum {

/// The working coefficient field K: the rationals, or F_p for a prime p.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }
    /// Throws InvalidArgument unless p is prime and below 2^62.
    static Field prime(std::uint64_t p);

    constexpr bool is_rational() const { return p_ == 0; }
    constexpr bool is_prime() const { return p_ != 0; }
    constexpr std::uint64_t characteristic() const { return p_; }

    /// "q" or "fp:<p>".
    std::string to_string() const;
    static Field parse(std::string_view text);

    friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

private:
    friend class Scalar;
    constexpr explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

/// Exact element of K.
///
/// Rational values are kept in lowest terms with positive denominator; prime
/// field values are residues in [0, p). A rational scalar combined with a
/// prime-field scalar is first reduced into F_p, so integer literals such as
/// Scalar(1) act as field-agnostic constants. Combining two different prime
/// fields throws FieldMismatch.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class v);
    Scalar(long num, long den);

    /// Residue of v in F_p (v reduced mod p).
    static Scalar modular(const mpz_class& v, std::uint64_t p);
    /// Parses "p", "-p" or "p/q".
    static Scalar parse(std::string_view text);

    Field field() const { return Field(p_); }
    std::uint64_t characteristic() const { return p_; }

    /// Maps this value into `f`. Rationals reduce into F_p (denominator must be
    /// invertible); a prime-field value only maps into its own field.
    Scalar in(Field f) const;

    bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

    /// Rational value; only meaningful in characteristic 0.
    const mpq_class& rational() const { return q_; }
    /// Residue; only meaningful in characteristic p.
    std::uint64_t residue() const { return r_; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical text: "3", "-1/2"; residues print as their representative.
    std::string to_string() const;

private:
    static void unify(Scalar& a, Scalar& b);

    mpq_class q_{0};
    std::uint64_t p_ = 0;
    std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace sigmasum
