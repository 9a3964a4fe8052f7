#include <doctest.h>

#include "../oracles.hpp"
#include "../support.hpp"

using namespace sigmasum;
using namespace sigmasum::test;

namespace {

oracle::Bivariate bivariate(const AnnPoly& p) {
    oracle::Bivariate b;
    for (std::size_t k = 0; k < p.size(); ++k)
        for (std::size_t j = 0; j < p[k].size(); ++j)
            if (!p[k][j].is_zero()) b[{static_cast<int>(k), static_cast<int>(j)}] = p[k][j].rational();
    return b;
}

const char* kY = "alg((s-1)*T^2+T-(s+s^2); 1)";
const char* kZ = "alg(T^2-(3-s)*T+(2-s^2); 2)";
const char* kRootOneMinus = "alg(T^2-(1-s); 1)";

}  // namespace

TEST_SUITE("addsum") {
    TEST_CASE("scalar_polynomial examples") {
        CHECK(scalar_polynomial(eval("alg(T^2-(4-s); 2)")) == tpoly({-3, 0, 1}));
        CHECK(scalar_polynomial(eval(kY)) == tpoly({-2, 1}));
        CHECK(scalar_polynomial(eval(kRootOneMinus)) == tpoly({0, 0, 1}));
    }

    TEST_CASE("classify examples") {
        const Classification inf = classify(eval("inv(alg(T^2-(1-s); 1))"));
        CHECK(inf.kind == SeriesClass::Infinite);
        CHECK(inf.scalar_poly == tpoly({1}));
        CHECK_FALSE(inf.univalent);

        const Classification g = classify(eval("grandi"));
        CHECK(g.kind == SeriesClass::Algebraic);
        CHECK(g.scalar_poly == tpoly({q(-1, 2), 1}));
        REQUIRE(g.univalent);
        CHECK(g.univalent->root == q(1, 2));
        CHECK(g.univalent->multiplicity == 1);

        const Classification z = classify(eval(kZ));
        REQUIRE(z.univalent);
        CHECK(z.univalent->root == Scalar(1));
        CHECK(z.univalent->multiplicity == 2);
        CHECK(z.sum_degree == 2);
        CHECK(z.scalar_degree == 2);
    }

    TEST_CASE("absolutely_algebraic examples") {
        CHECK(absolutely_algebraic(eval("grandi")));
        CHECK_FALSE(absolutely_algebraic(eval(kY)));
        CHECK(absolutely_algebraic(eval(kRootOneMinus)));
        // Grandi's inverse annihilator reflects to -T + (1+s), image t - 2.
        CHECK(monic(apply_add(reflected(ann("(1+s)*T-1")))) == tpoly({-2, 1}));
    }

    TEST_CASE("absolutely_algebraic agrees with the U-construction oracle") {
        for (const char* e : {"grandi", kY, kZ, kRootOneMinus, "alg(T^2-(4-s); 2)", "alg((1-s)*T^3+T-2; 1)",
                              "rat(1; 1-2*s)", "alg(T^2-(1+4*s); 1)", "shiftl(alg((s-1)*T^2+T-(s+s^2); 1), 2)"}) {
            CAPTURE(e);
            const AlgebraicSeries a = eval(e);
            if (classify(a).kind != SeriesClass::Algebraic) continue;
            CHECK(absolutely_algebraic(a) == oracle::absolutely_algebraic_via_u(bivariate(a.ann())));
        }
        Gen g(41);
        for (int i = 0; i < 40; ++i) {
            const AlgebraicSeries a = random_algebraic(g, 32);
            if (classify(a).kind != SeriesClass::Algebraic) continue;
            CHECK(absolutely_algebraic(a) == oracle::absolutely_algebraic_via_u(bivariate(a.ann())));
        }
    }

    TEST_CASE("degree_sufficiency examples") {
        CHECK(degree_sufficiency(eval(kRootOneMinus)));
        CHECK_FALSE(degree_sufficiency(eval(kY)));
        CHECK(degree_sufficiency(eval("grandi")));
    }

    TEST_CASE("univalent_sum examples") {
        const SumResult g = univalent_sum(eval("rat(1-s; 1-s^2)"));
        CHECK(g.status == SumStatus::Summed);
        REQUIRE(g.value);
        CHECK(*g.value == q(1, 2));
        CHECK(g.certificate.stripped_power == 1);
        CHECK(g.certificate.annihilator == ann("(1+s)*T-1"));

        const SumResult r = univalent_sum(eval("alg(T^2-(4-s); 2)"));
        CHECK(r.status == SumStatus::NotUnivalent);
        CHECK_FALSE(r.value);

        CHECK(univalent_sum(eval(kY)).status == SumStatus::NotAbsolutelyAlgebraic);
        CHECK(univalent_sum(eval("geom(1)")).status == SumStatus::Infinite);
        CHECK(*univalent_sum(eval(kZ)).value == Scalar(1));
        CHECK(univalent_sum(eval(kRootOneMinus)).value->is_zero());
    }

    TEST_CASE("telescope_eval examples") {
        CHECK(telescope_eval(one_minus_sigma(), sig("1-s^2")) == q(1, 2));
        CHECK(telescope_eval(1, sig("1-2*s")) == Scalar(-1));
        try {
            telescope_eval(1, one_minus_sigma());
            FAIL("expected TelescopeDegenerate");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::TelescopeDegenerate);
        }
        CHECK(telescope_eval(SigmaPoly{}, sig("1-s")).is_zero());
        CHECK_THROWS_AS(telescope_eval(1, SigmaPoly{}), Error);
    }

    TEST_CASE("zeroes examples") {
        const RootReport g = zeroes(eval("grandi"));
        REQUIRE(g.roots.size() == 1);
        CHECK(g.roots[0].value == q(1, 2));
        const RootReport r = zeroes(eval("alg(T^2-(1+4*s); 1)"));
        CHECK(r.roots.empty());
        CHECK(r.cofactor == tpoly({-5, 0, 1}));
        const RootReport z = zeroes(eval(kRootOneMinus));
        REQUIRE(z.roots.size() == 1);
        CHECK(z.roots[0].value.is_zero());
        CHECK(z.roots[0].multiplicity == 2);
    }

    TEST_CASE("the scalar polynomial divides the image of every multiple") {
        Gen g(42);
        for (int i = 0; i < 100; ++i) {
            const AlgebraicSeries a = random_algebraic(g, 32);
            const AnnPoly multiple = g.ann_poly(g.integer(0, 2), 3) * a.ann();
            const AnnPoly reduced = primitive_part(strip_one_minus_sigma(multiple).first).first;
            CHECK(scalar_polynomial(a).divides(monic(apply_add(reduced))));
        }
    }

    TEST_CASE("telescoping is subsumed by the univalent sum") {
        Gen g(43);
        int checked = 0;
        for (int i = 0; i < 100; ++i) {
            const SigmaPoly a = g.sigma_poly(4), f = g.unit_poly(4);
            Scalar expected;
            try {
                expected = telescope_eval(a, f);
            } catch (const Error&) {
                continue;
            }
            const SumResult r = univalent_sum(rational_series(a, f, 32));
            CHECK(r.status == SumStatus::Summed);
            REQUIRE(r.value);
            CHECK(*r.value == expected);
            ++checked;
        }
        CHECK(checked > 50);
    }

    TEST_CASE("the rational extension coincides with telescoping at K[s]") {
        // A = B X with B(1) != 0 is the same relation as telescoping with F = B.
        Gen g(44);
        for (int i = 0; i < 30; ++i) {
            const SigmaPoly b = g.unit_poly(3);
            if (add_sum(b).is_zero()) continue;
            const SigmaPoly a = g.sigma_poly(3);
            CHECK(telescope_eval(a, b) == add_sum(a) / add_sum(b));
        }
    }

    TEST_CASE("scalar polynomial ignores scalar and (1-s) multiples of the relation") {
        Gen g(45);
        for (int i = 0; i < 40; ++i) {
            const AlgebraicSeries a = random_algebraic(g, 32);
            const AnnPoly scaled = SigmaPoly(g.nonzero()) * one_minus_sigma().pow(static_cast<unsigned>(g.integer(0, 3))) * a.ann();
            const AlgebraicSeries b = make_algebraic(scaled, a.seed(), 32);
            CHECK(scalar_polynomial(b) == scalar_polynomial(a));
        }
    }

    TEST_CASE("degree sufficiency implies absolute algebraicity") {
        Gen g(46);
        for (int i = 0; i < 60; ++i) {
            const AlgebraicSeries a = random_algebraic(g, 32);
            if (classify(a).kind != SeriesClass::Algebraic) continue;
            if (degree_sufficiency(a)) CHECK(absolutely_algebraic(a));
        }
    }

    TEST_CASE("inverse scalar polynomial divides the reflected image") {
        Gen g(47);
        for (int i = 0; i < 40; ++i) {
            const AlgebraicSeries a = random_algebraic(g, 32);
            if (a.expansion()[0].is_zero() || a.ann()[0].is_zero()) continue;
            const AlgebraicSeries inv = ann_inverse(a);
            const AnnPoly r = primitive_part(strip_one_minus_sigma(reflected(a.ann())).first).first;
            CHECK(scalar_polynomial(inv).divides(monic(apply_add(r))));
        }
    }

    TEST_CASE("practically zero exactly when univalent at 0 and absolutely algebraic") {
        Gen g(48);
        for (int i = 0; i < 60; ++i) {
            const AlgebraicSeries a = random_algebraic(g, 32);
            const Classification c = classify(a);
            if (c.kind != SeriesClass::Algebraic) continue;
            const bool tm = c.scalar_poly == ScalarPolynomial::monomial(Scalar(1), c.scalar_degree);
            CHECK(*c.practically_zero == (tm && *c.absolutely_algebraic));
            if (*c.practically_zero) CHECK(*univalent_sum(a).value == Scalar(0));
        }
    }

    TEST_CASE("prime-field summation") {
        const Field f7 = Field::prime(7);
        const SumResult g = univalent_sum(eval("grandi", 32, f7));
        REQUIRE(g.value);
        CHECK(g.value->residue() == 4);
        // t^2 over F_5 from sqrt(1-s) is still practically zero
        const Classification c = classify(eval("alg(T^2-(1-s); 1)", 32, Field::prime(5)));
        CHECK(*c.practically_zero);
    }
}
