#include "sigmasum/series.hpp"

#include <algorithm>

namespace sigmasum {

Series Series::from_poly(const SigmaPoly& p, std::size_t order) {
    std::vector<Scalar> c(order, Scalar(0));
    for (std::size_t i = 0; i < order && i < p.size(); ++i) c[i] = p[i];
    return Series(std::move(c));
}

std::size_t Series::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return i;
    return c_.size();
}

Series Series::truncated(std::size_t order) const {
    if (order > c_.size()) throw Error(ErrorKind::OrderExhausted, "cannot extend a truncated series");
    return Series(std::vector<Scalar>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order)));
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Series operator+(const Series& x, const Series& y) {
    std::size_t n = std::min(x.order(), y.order());
    std::vector<Scalar> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = x.c_[i] + y.c_[i];
    return Series(std::move(r));
}

Series operator-(const Series& x, const Series& y) {
    std::size_t n = std::min(x.order(), y.order());
    std::vector<Scalar> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = x.c_[i] - y.c_[i];
    return Series(std::move(r));
}

Series operator*(const Series& x, const Series& y) {
    std::size_t n = std::min(x.order(), y.order());
    std::vector<Scalar> r(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) r[i + j] += x.c_[i] * y.c_[j];
    }
    return Series(std::move(r));
}

Series operator*(const Scalar& s, const Series& x) {
    Series r = x;
    for (auto& c : r.c_) c *= s;
    return r;
}

bool agree(const Series& a, const Series& b) {
    std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i < n; ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

bool operator==(const Series& a, const Series& b) { return a.order() == b.order() && agree(a, b); }

Series series_add(const Series& x, const Series& y) { return x + y; }
Series series_mul(const Series& x, const Series& y) { return x * y; }

Series series_invert(const Series& u) {
    std::size_t n = u.order();
    if (n == 0) return u;
    if (u[0].is_zero()) throw Error(ErrorKind::NotAUnit, "series with zero constant term is not a unit");
    Scalar inv0 = u[0].inverse();
    std::vector<Scalar> v(n, Scalar(0));
    v[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Scalar acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            if (!u[j].is_zero()) acc += u[j] * v[k - j];
        }
        v[k] = -acc * inv0;
    }
    return Series(std::move(v));
}

Series series_pow(const Series& x, unsigned e) {
    std::vector<Scalar> one(x.order(), Scalar(0));
    if (!one.empty()) one[0] = Scalar(1);
    Series r(std::move(one)), base = x;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Series shift_left(const Series& x, std::size_t n) {
    if (n > x.order()) throw Error(ErrorKind::OrderExhausted, "shift exceeds the known coefficients");
    return Series(std::vector<Scalar>(x.coeffs().begin() + static_cast<std::ptrdiff_t>(n), x.coeffs().end()));
}

Series shift_right(const Series& x, std::size_t n) {
    std::vector<Scalar> c(n, Scalar(0));
    c.insert(c.end(), x.coeffs().begin(), x.coeffs().end());
    return Series(std::move(c));
}

std::pair<SigmaPoly, Series> head_split(const Series& x, std::size_t n) {
    if (n > x.order()) throw Error(ErrorKind::OrderExhausted, "head exceeds the known coefficients");
    SigmaPoly head(std::vector<Scalar>(x.coeffs().begin(), x.coeffs().begin() + static_cast<std::ptrdiff_t>(n)));
    return {std::move(head), shift_left(x, n)};
}

Series series_from_rational(const SigmaPoly& a, const SigmaPoly& f, std::size_t order) {
    if (f[0].is_zero()) throw Error(ErrorKind::DenominatorNotUnit, "denominator has zero constant term");
    return Series::from_poly(a, order) * series_invert(Series::from_poly(f, order));
}

}  // namespace sigmasum
