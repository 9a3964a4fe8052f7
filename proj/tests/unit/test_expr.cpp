#include <doctest.h>

#include <string>

#include "../support.hpp"
#include "sigmasum/report.hpp"

using namespace sigmasum;
using namespace sigmasum::test;

namespace {

std::string syntax_message(const std::string& text) {
    try {
        parse_expr(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SyntaxError);
        return e.what();
    }
    FAIL("no error for " << text);
    return {};
}

Expr random_expr(Gen& g, int depth) {
    Expr e;
    const long pick = depth <= 0 ? g.integer(0, 1) : g.integer(0, 8);
    switch (pick) {
        case 0:
            e.kind = Expr::Kind::Number;
            e.number = static_cast<unsigned long>(g.integer(0, 20));
            return e;
        case 1: e.kind = Expr::Kind::Sigma; return e;
        case 2:
            e.kind = Expr::Kind::Neg;
            e.args.push_back(random_expr(g, depth - 1));
            return e;
        case 3:
            e.kind = Expr::Kind::Pow;
            e.exponent = g.integer(-2, 3);
            e.args.push_back(random_expr(g, 0));
            return e;
        case 4:
            e.kind = Expr::Kind::Call;
            e.name = g.integer(0, 1) ? "inv" : "geom";
            e.args.push_back(random_expr(g, depth - 1));
            return e;
        case 5:
            e.kind = Expr::Kind::Call;
            e.name = "rat";
            e.args.push_back(random_expr(g, depth - 1));
            e.args.push_back(random_expr(g, depth - 1));
            return e;
        default: {
            static const Expr::Kind ops[] = {Expr::Kind::Add, Expr::Kind::Sub, Expr::Kind::Mul, Expr::Kind::Div};
            e.kind = ops[g.integer(0, 3)];
            e.args.push_back(random_expr(g, depth - 1));
            e.args.push_back(random_expr(g, depth - 1));
            return e;
        }
    }
}

}  // namespace

TEST_SUITE("expr") {
    TEST_CASE("parse examples") {
        const Expr e = parse_expr("rat(1 - s; 1 - s^2)");
        CHECK(e.kind == Expr::Kind::Call);
        CHECK(e.name == "rat");
        REQUIRE(e.args.size() == 2);
        CHECK(e.args[1].kind == Expr::Kind::Sub);
        const Expr p = parse_expr("-s^2");
        CHECK(p.kind == Expr::Kind::Neg);
        CHECK(p.args[0].kind == Expr::Kind::Pow);
        CHECK(p.args[0].exponent == 2);
        CHECK(parse_expr("grandi").kind == Expr::Kind::Call);
        CHECK(parse_expr("a*b+c") == parse_expr("(a*b)+c"));
        CHECK_FALSE(parse_expr("a*(b+c)") == parse_expr("a*b+c"));
    }

    TEST_CASE("syntax errors carry positions") {
        CHECK(syntax_message("1 +") == "1:4: unexpected end of input");
        CHECK(syntax_message("rat(1; 2").rfind("1:9:", 0) == 0);
        CHECK(syntax_message("1 $ 2").rfind("1:3:", 0) == 0);
        CHECK(syntax_message("1 +\n  )").rfind("2:3:", 0) == 0);
    }

    TEST_CASE("render examples") {
        CHECK(render(parse_expr("rat(1-s;1-s^2)")) == "rat(1 - s; 1 - s^2)");
        CHECK(render(parse_expr("(1+s)*T-1")) == "(1 + s)*T - 1");
        CHECK(render(parse_expr("1-(2-s)")) == "1 - (2 - s)");
        CHECK(render(parse_expr("prepend(grandi; 5, 1)")) == "prepend(grandi; 5, 1)");
    }

    TEST_CASE("render round trips through the parser") {
        Gen g(71);
        for (int i = 0; i < 300; ++i) {
            const Expr e = random_expr(g, 4);
            const std::string text = render(e);
            CAPTURE(text);
            CHECK(parse_expr(text) == e);
            CHECK(render(parse_expr(text)) == text);
        }
    }

    TEST_CASE("evaluate examples") {
        const AlgebraicSeries g = eval("grandi");
        CHECK(g.ann() == ann("(1+s)*T-1"));
        CHECK(eval("rat(1-s; 1-s^2)").ann() == g.ann());
        CHECK(eval("1/(1+s)").ann() == g.ann());
        CHECK(eval("geom(2)").expansion()[5] == Scalar(32));
        CHECK(*univalent_sum(eval("grandi^2")).value == q(1, 4));
        CHECK(*univalent_sum(eval("grandi + grandi")).value == Scalar(1));
        CHECK(*univalent_sum(eval("inv(grandi)")).value == Scalar(2));
        CHECK(*univalent_sum(eval("prepend(grandi; 5, 1)")).value == q(11, 2));
        CHECK(eval("shiftl(grandi, 2)").ann() == g.ann());
        const AlgebraicSeries r = eval("alg(T^2-(4-s); 2)");
        CHECK(r.expansion().truncated(3) == series({2, q(-1, 4), q(-1, 64)}));
        CHECK(eval("alg(T^2-(4-s); 2) - alg(T^2-(4-s); 2)").expansion().valuation() == kDefaultOrder);
    }

    TEST_CASE("evaluation errors") {
        auto kind = [](const std::string& text) {
            try {
                eval(text, 16);
            } catch (const Error& e) {
                return e.kind();
            }
            return ErrorKind::InvalidArgument;
        };
        CHECK(kind("rat(1; s)") == ErrorKind::DenominatorNotUnit);
        CHECK(kind("1/0") == ErrorKind::DivisionByZero);
        CHECK(kind("alg(T^2-(4-s); 1)") == ErrorKind::NoBranchMatches);
        CHECK(kind("inv(s)") == ErrorKind::NotAUnit);
        CHECK_THROWS_AS(eval("T + 1"), Error);
        CHECK_THROWS_AS(eval("nosuch(1)"), Error);
    }

    TEST_CASE("parse_stream") {
        const Series x = parse_stream("# header\n1\n-1/2  # inline\n\n3\n");
        CHECK(x == series({1, q(-1, 2), 3}));
        CHECK_THROWS_AS(parse_stream("1\nx\n"), Error);
        const Series f = parse_stream("1\n1/2\n", Field::prime(7));
        CHECK(f[1].residue() == 4);
    }

    TEST_CASE("certificates re-ingest to the same series") {
        for (const char* text : {"grandi", "alg(T^2-(4-s); 2)", "alg((s-1)*T^2+T-(s+s^2); 1)",
                                 "prepend(grandi; 5, 1)", "inv(alg(T^2-(1-s); 1))", "alg(T^2-(1-s); 1)*grandi"}) {
            CAPTURE(text);
            const AlgebraicSeries a = eval(text);
            const nlohmann::ordered_json cert = certificate_json(text, a);
            std::string call = "alg(" + cert["annihilator"].get<std::string>();
            bool first = true;
            for (const auto& s : cert["seed"]) {
                call += (first ? "; " : ", ") + s.get<std::string>();
                first = false;
            }
            call += ")";
            const AlgebraicSeries b = eval(call);
            CHECK(b.ann() == a.ann());
            CHECK(agree(b.expansion(), a.expansion()));
            // stripped_power and order describe the input relation, not the series
            nlohmann::ordered_json again = certificate_json(text, b), expected = cert;
            for (const char* key : {"stripped_power", "order"}) {
                again.erase(key);
                expected.erase(key);
            }
            CHECK(again == expected);
        }
    }

    TEST_CASE("certificate fields") {
        const nlohmann::ordered_json c = certificate_json("grandi", eval("grandi"));
        CHECK(c["annihilator"] == "(1+s)*T - 1");
        CHECK(c["scalar_poly"] == "t - 1/2");
        CHECK(c["class"] == "algebraic");
        CHECK(c["value"] == "1/2");
        CHECK(c["status"] == "summed");
        CHECK(c["field"] == "q");
        const nlohmann::ordered_json y = certificate_json("y", eval("alg((s-1)*T^2+T-(s+s^2); 1)"));
        CHECK(y["value"].is_null());
        CHECK(y["root"] == "2");
        CHECK(y["absolutely_algebraic"] == false);
        const nlohmann::ordered_json inf = certificate_json("geom(1)", eval("geom(1)"));
        CHECK(inf["class"] == "infinite");
        CHECK(inf["absolutely_algebraic"].is_null());
    }

    TEST_CASE("prime field evaluation") {
        const Field f7 = Field::prime(7);
        const AlgebraicSeries g = eval("grandi", 16, f7);
        CHECK(g.expansion()[1].residue() == 6);
        CHECK(univalent_sum(g).value->residue() == 4);
        CHECK(certificate_json("grandi", g, f7)["field"] == "fp:7");
        // rational seeds are coerced into the field
        const AlgebraicSeries r = eval("alg(T^2-(4-s); 2)", 16, f7);
        CHECK(ann_eval_at_series(r.ann(), r.expansion()).valuation() == 16);
    }
}
