#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "sigmasum/algseries.hpp"
#include "sigmasum/annpoly.hpp"
#include "sigmasum/scalar.hpp"

namespace sigmasum {

/// Syntax tree of the series expression language:
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | atom ('^' ['-'] int)?
///   atom   := int | 's' | 'T' | call | '(' expr ')'
///   call   := name ['(' expr ((',' | ';') expr)* ')']
///
/// Calls: rat(A; F), alg(P; seed...), grandi, geom(a), inv(e), shiftl(e, n),
/// prepend(e; F, n). 'T' may only occur in the first argument of alg.
struct Expr {
    enum class Kind { Number, Sigma, Var, Neg, Add, Sub, Mul, Div, Pow, Call };

    Kind kind = Kind::Number;
    mpz_class number;           // Number
    long exponent = 0;          // Pow
    std::string name;           // Call
    std::vector<Expr> args;     // operands or call arguments
    std::size_t line = 1, column = 1;

    friend bool operator==(const Expr& a, const Expr& b);
};

/// Throws SyntaxError with "line:column" in the message.
Expr parse_expr(std::string_view text);

/// Canonical text; parse_expr(render(e)) == e.
std::string render(const Expr& e);

struct EvalConfig {
    Field field = Field::rationals();
    std::size_t order = kDefaultOrder;
};

AlgebraicSeries evaluate(const Expr& e, const EvalConfig& config);

/// Parses P of alg(P; ...) as a polynomial in s and T.
AnnPoly parse_annpoly(std::string_view text, Field field = Field::rationals());

/// Coefficient stream: one rational per line, '#' starts a comment.
Series parse_stream(std::string_view text, Field field = Field::rationals());

}  // namespace sigmasum
