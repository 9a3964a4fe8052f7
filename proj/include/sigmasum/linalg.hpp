#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sigmasum/annpoly.hpp"
#include "sigmasum/scalar.hpp"

namespace sigmasum {

/// Dense row-major matrix over an integral domain R.
template <class R>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const R& fill = R{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_, cols_;
    std::vector<R> data_;
};

inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
template <class R>
bool is_zero(const R& x) { return x.is_zero(); }
inline Scalar exact_div(const Scalar& a, const Scalar& b) { return a / b; }

/// Fraction-free (Bareiss) row echelon form in place. Returns the pivot
/// columns; rows past their count are zero. `swaps` counts row exchanges.
template <class R>
std::vector<std::size_t> fraction_free_echelon(Matrix<R>& m, std::size_t* swaps = nullptr) {
    std::vector<std::size_t> pivots;
    R prev = R(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            m.swap_rows(p, r);
            if (swaps) ++*swaps;
        }
        const R piv = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const R lead = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                R v = piv * m(i, j) - lead * m(r, j);
                m(i, j) = exact_div(v, prev);
            }
            m(i, c) = R(0);
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Determinant by fraction-free elimination; every division is exact.
template <class R>
R bareiss_determinant(Matrix<R> m) {
    const std::size_t n = m.rows();
    if (n == 0) return R(1);
    std::size_t swaps = 0;
    auto pivots = fraction_free_echelon(m, &swaps);
    if (pivots.size() < n) return R(0);
    R det = m(n - 1, n - 1);
    return swaps % 2 ? R(0) - det : det;
}

/// Basis of {x : m x = 0} over K. Rational matrices are scaled to integers
/// and eliminated fraction-free; prime-field matrices are eliminated directly.
std::vector<std::vector<Scalar>> nullspace(const Matrix<Scalar>& m);

/// Rank over K.
std::size_t rank(const Matrix<Scalar>& m);

}  // namespace sigmasum
