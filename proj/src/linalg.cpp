#include "sigmasum/linalg.hpp"

namespace sigmasum {

namespace {

bool is_prime_field(const Matrix<Scalar>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).characteristic() != 0) return true;
    return false;
}

Matrix<mpz_class> integer_rows(const Matrix<Scalar>& m) {
    Matrix<mpz_class> z(m.rows(), m.cols(), mpz_class(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class den = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpq_class v = m(i, j).rational() * den;
            z(i, j) = v.get_num();
        }
    }
    return z;
}

template <class R>
std::vector<std::vector<Scalar>> back_substitute(const Matrix<R>& e, const std::vector<std::size_t>& pivots,
                                                 auto to_scalar) {
    const std::size_t n = e.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> x(n, Scalar(0));
        x[f] = Scalar(1);
        for (std::size_t r = pivots.size(); r-- > 0;) {
            std::size_t c = pivots[r];
            Scalar acc(0);
            for (std::size_t j = c + 1; j < n; ++j) {
                if (x[j].is_zero() || is_zero(e(r, j))) continue;
                acc += to_scalar(e(r, j)) * x[j];
            }
            x[c] = -acc / to_scalar(e(r, c));
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace(const Matrix<Scalar>& m) {
    if (is_prime_field(m)) {
        Matrix<Scalar> e = m;
        auto pivots = fraction_free_echelon(e);
        return back_substitute(e, pivots, [](const Scalar& s) { return s; });
    }
    Matrix<mpz_class> e = integer_rows(m);
    auto pivots = fraction_free_echelon(e);
    return back_substitute(e, pivots, [](const mpz_class& z) { return Scalar(mpq_class(z)); });
}

std::size_t rank(const Matrix<Scalar>& m) {
    if (is_prime_field(m)) {
        Matrix<Scalar> e = m;
        return fraction_free_echelon(e).size();
    }
    Matrix<mpz_class> e = integer_rows(m);
    return fraction_free_echelon(e).size();
}

}  // namespace sigmasum
