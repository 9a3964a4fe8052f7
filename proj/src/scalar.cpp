#include "sigmasum/scalar.hpp"

#include <charconv>
#include <ostream>

namespace sigmasum {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::OrderExhausted: return "OrderExhausted";
        case ErrorKind::DenominatorNotUnit: return "DenominatorNotUnit";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::InseparableFactor: return "InseparableFactor";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::SeedNotRoot: return "SeedNotRoot";
        case ErrorKind::SingularRoot: return "SingularRoot";
        case ErrorKind::NoBranchMatches: return "NoBranchMatches";
        case ErrorKind::TelescopeDegenerate: return "TelescopeDegenerate";
        case ErrorKind::InsufficientOrder: return "InsufficientOrder";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 62)) {
        throw Error(ErrorKind::InvalidArgument, "prime field modulus out of range: " + std::to_string(p));
    }
    mpz_class z(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
        throw Error(ErrorKind::InvalidArgument, "field modulus is not prime: " + std::to_string(p));
    }
    return Field(p);
}

std::string Field::to_string() const {
    return p_ == 0 ? std::string("q") : "fp:" + std::to_string(p_);
}

Field Field::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.substr(0, 3) == "fp:") {
        std::uint64_t p = 0;
        auto body = text.substr(3);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown field '" + std::string(text) + "' (expected q or fp:<p>)");
}

Scalar::Scalar(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }

Scalar::Scalar(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Scalar Scalar::modular(const mpz_class& v, std::uint64_t p) {
    Scalar s;
    s.p_ = p;
    s.r_ = reduce(v, p);
    return s;
}

Scalar Scalar::parse(std::string_view text) {
    std::string t(text);
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Scalar(mpq_class(mpz_class(t)));
        mpz_class num(t.substr(0, slash)), den(t.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + t + "'");
        return Scalar(mpq_class(num, den));
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::SyntaxError, "not a rational number: '" + t + "'");
    }
}

Scalar Scalar::in(Field f) const {
    std::uint64_t p = f.characteristic();
    if (p == p_) return *this;
    if (p_ != 0) {
        throw Error(ErrorKind::FieldMismatch, "cannot map " + field().to_string() + " value into " + f.to_string());
    }
    std::uint64_t num = reduce(q_.get_num(), p);
    std::uint64_t den = reduce(q_.get_den(), p);
    if (den == 0) {
        throw Error(ErrorKind::DivisionByZero, "denominator of " + to_string() + " vanishes in " + f.to_string());
    }
    Scalar s;
    s.p_ = p;
    s.r_ = mulmod(num, powmod(den, p - 2, p), p);
    return s;
}

void Scalar::unify(Scalar& a, Scalar& b) {
    if (a.p_ == b.p_) return;
    if (a.p_ == 0) {
        a = a.in(b.field());
    } else if (b.p_ == 0) {
        b = b.in(a.field());
    } else {
        throw Error(ErrorKind::FieldMismatch, "mixed prime fields " + a.field().to_string() + " and " + b.field().to_string());
    }
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    Scalar s = *this;
    if (p_ == 0) {
        s.q_ = 1 / q_;
        s.q_.canonicalize();
    } else {
        s.r_ = powmod(r_, p_ - 2, p_);
    }
    return s;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar r = Scalar(1);
    if (p_ != 0) r = r.in(field());
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ == 0) {
        s.q_ = -q_;
    } else {
        s.r_ = r_ == 0 ? 0 : p_ - r_;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (p_ == 0 && o.p_ == 0) {
        q_ += o.q_;
        return *this;
    }
    Scalar b = o;
    unify(*this, b);
    r_ = r_ + b.r_;
    if (r_ >= p_) r_ -= p_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (p_ == 0 && o.p_ == 0) {
        q_ -= o.q_;
        return *this;
    }
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (p_ == 0 && o.p_ == 0) {
        q_ *= o.q_;
        return *this;
    }
    Scalar b = o;
    unify(*this, b);
    r_ = mulmod(r_, b.r_, p_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (p_ == 0 && o.p_ == 0) {
        q_ /= o.q_;
        return *this;
    }
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ == 0 && b.p_ == 0) return a.q_ == b.q_;
    Scalar x = a, y = b;
    Scalar::unify(x, y);
    return x.r_ == y.r_;
}

std::string Scalar::to_string() const {
    return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace sigmasum
