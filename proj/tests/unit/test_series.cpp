#include <doctest.h>

#include "../oracles.hpp"
#include "../support.hpp"

using namespace sigmasum;
using namespace sigmasum::test;

namespace {

oracle::Coeffs raw(const Series& x) {
    oracle::Coeffs c;
    for (const auto& s : x.coeffs()) c.push_back(s.rational());
    return c;
}

Series alternating(std::size_t n, long a, long b) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < n; ++i) c.emplace_back(i % 2 ? b : a);
    return Series(std::move(c));
}

}  // namespace

TEST_SUITE("scalar") {
    TEST_CASE("rationals are kept in lowest terms") {
        CHECK(q(6, -4).to_string() == "-3/2");
        CHECK(q(0, 5).is_zero());
        CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
        CHECK(Scalar::parse("-10/4") == q(-5, 2));
        CHECK_THROWS_AS(Scalar(1, 0), Error);
    }

    TEST_CASE("prime field arithmetic") {
        const Field f7 = Field::prime(7);
        const Scalar two = Scalar(2).in(f7);
        CHECK(two.inverse().residue() == 4);
        CHECK((two * Scalar(4)).is_one());
        CHECK(Scalar(-1).in(f7).residue() == 6);
        CHECK(q(1, 2).in(f7).residue() == 4);
        CHECK(two.pow(6).is_one());
        CHECK(two.to_string() == "2");
    }

    TEST_CASE("fields are validated and never mixed") {
        CHECK_THROWS_AS(Field::prime(9), Error);
        CHECK(Field::parse("fp:13").characteristic() == 13);
        CHECK(Field::parse("q").is_rational());
        CHECK_THROWS_AS(Field::parse("fp:x"), Error);
        const Scalar a = Scalar(1).in(Field::prime(5)), b = Scalar(1).in(Field::prime(7));
        try {
            (void)(a + b);
            FAIL("expected FieldMismatch");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::FieldMismatch);
        }
        CHECK_THROWS_AS(q(1, 7).in(Field::prime(7)), Error);
    }
}

TEST_SUITE("series_core") {
    TEST_CASE("series_add examples") {
        CHECK(series_add(series({1, 1}), series({1, -1})) == series({2, 0}));
        const Series x = series({3, q(1, 2), -7});
        CHECK(series_add(x, Series::zero(3)) == x);
        CHECK(series_add(alternating(8, 1, -1), alternating(8, 1, 1)) == alternating(8, 2, 0));
        CHECK(series_add(series({1, 2, 3}), series({1})).order() == 1);
    }

    TEST_CASE("series_mul examples") {
        Series geom = series_from_rational(1, one_minus_sigma(), 10);
        Series one = series_mul(Series::from_poly(one_minus_sigma(), 10), geom);
        CHECK(one == Series::from_poly(1, 10));
        const Series x = series({q(1, 3), 4, -2});
        CHECK(series_mul(x, Series::from_poly(1, 3)) == x);
        const Series g = alternating(8, 1, -1);
        std::vector<Scalar> expect;
        for (long i = 0; i < 8; ++i) expect.emplace_back(i % 2 ? -(i + 1) : i + 1);
        CHECK(series_mul(g, g) == Series(expect));
        CHECK(raw(series_mul(g, g)) == oracle::convolve(raw(g), raw(g)));
    }

    TEST_CASE("series_invert examples") {
        CHECK(series_invert(Series::from_poly(one_minus_sigma(), 6)) == series({1, 1, 1, 1, 1, 1}));
        const Series u = series({2, -1, q(1, 3), 5});
        CHECK(series_invert(series_invert(u)) == u);
        const Series root = make_algebraic(ann("T^2-(1-s)"), series({1}), 5).expansion();
        CHECK(series_invert(root) == series({1, q(1, 2), q(3, 8), q(5, 16), q(35, 128)}));
        try {
            series_invert(series({0, 1}));
            FAIL("expected NotAUnit");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotAUnit);
        }
    }

    TEST_CASE("shift_left and head_split examples") {
        CHECK(shift_left(series({1, 2, 3}), 1) == series({2, 3}));
        const Series x = series({5, 6});
        CHECK(shift_left(x, 0) == x);
        CHECK_THROWS_AS(shift_left(x, 3), Error);

        const Series g = alternating(8, 1, -1);
        auto [head, tail] = head_split(g, 2);
        CHECK(head == one_minus_sigma());
        CHECK(tail == alternating(6, 1, -1));
        auto [h0, t0] = head_split(g, 0);
        CHECK(h0.is_zero());
        CHECK(t0 == g);

        const Series r = make_algebraic(ann("T^2-(4-s)"), series({2}), 5).expansion();
        auto [h1, t1] = head_split(r, 1);
        CHECK(h1 == SigmaPoly(2));
        CHECK(t1 == series({q(-1, 4), q(-1, 64), q(-1, 512), q(-5, 16384)}));
    }

    TEST_CASE("series_from_rational examples") {
        CHECK(series_from_rational(1, one_minus_sigma(), 4) == series({1, 1, 1, 1}));
        CHECK(series_from_rational(one_minus_sigma(), sig("1-s^2"), 6) == alternating(6, 1, -1));
        CHECK(series_from_rational(2, sig("1+s"), 6) == alternating(6, 2, -2));
        try {
            series_from_rational(1, sig("s"), 4);
            FAIL("expected DenominatorNotUnit");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DenominatorNotUnit);
        }
    }

    TEST_CASE("equality is up to the shared order") {
        CHECK(agree(series({1, 2, 3}), series({1, 2})));
        CHECK_FALSE(series({1, 2, 3}) == series({1, 2}));
        CHECK_FALSE(agree(series({1, 2}), series({1, 3})));
    }

    TEST_CASE("ring laws on random streams") {
        Gen g(11);
        for (int i = 0; i < 50; ++i) {
            const Series a = g.stream(12), b = g.stream(10), c = g.stream(11);
            CHECK(((a + b) + c) == (a + (b + c)));
            CHECK((a * b) == (b * a));
            CHECK(((a * b) * c) == (a * (b * c)));
            CHECK((a * (b + c)) == (a * b + a * c));
            CHECK((a + b).order() == 10);
        }
    }

    TEST_CASE("invert is a two-sided inverse to order") {
        Gen g(12);
        for (int i = 0; i < 50; ++i) {
            Series u = g.stream(16);
            if (u[0].is_zero()) continue;
            const Series v = series_invert(u);
            CHECK(u * v == Series::from_poly(1, 16));
            CHECK(v * u == Series::from_poly(1, 16));
        }
    }

    TEST_CASE("shifts compose and head_split reassembles") {
        Gen g(13);
        for (int i = 0; i < 50; ++i) {
            const Series x = g.stream(20);
            const auto m = static_cast<std::size_t>(g.integer(0, 10)), n = static_cast<std::size_t>(g.integer(0, 10));
            CHECK(shift_left(x, m + n) == shift_left(shift_left(x, m), n));
            auto [head, tail] = head_split(x, n);
            CHECK(Series::from_poly(head, 20) + shift_right(tail, n) == x);
        }
    }

    TEST_CASE("series_from_rational times F reproduces A") {
        Gen g(14);
        for (int i = 0; i < 50; ++i) {
            const SigmaPoly a = g.sigma_poly(5), f = g.unit_poly(4);
            const Series x = series_from_rational(a, f, 24);
            CHECK(Series::from_poly(f, 24) * x == Series::from_poly(a, 24));
            oracle::Coeffs ac, fc;
            for (const auto& c : a.coeffs()) ac.push_back(c.rational());
            for (const auto& c : f.coeffs()) fc.push_back(c.rational());
            CHECK(raw(x) == oracle::divide(ac, fc, 24));
        }
    }

    TEST_CASE("prime-field series") {
        const Field f5 = Field::prime(5);
        const Series x = series_from_rational(SigmaPoly(Scalar(1).in(f5)), sig("1-2*s", f5), 6);
        CHECK(x[5].residue() == 32 % 5);
        CHECK(series_invert(x)[1].residue() == 3);
    }
}
