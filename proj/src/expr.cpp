#include "sigmasum/expr.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "sigmasum/closure.hpp"

namespace sigmasum {

bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.number == b.number && a.exponent == b.exponent && a.name == b.name &&
           a.args == b.args;
}

namespace {

// ---------------------------------------------------------------- parsing

struct Token {
    enum class Kind { Number, Ident, Symbol, End } kind;
    std::string text;
    std::size_t line, column;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < s.size();) {
        const char c = s[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        const std::size_t start = i;
        Token t{Token::Kind::Symbol, "", line, col};
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            t.kind = Token::Kind::Number;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            t.kind = Token::Kind::Ident;
        } else if (std::string_view("+-*/^(),;").find(c) != std::string_view::npos) {
            ++i;
        } else {
            throw Error(ErrorKind::SyntaxError, std::to_string(line) + ":" + std::to_string(col) +
                                                    ": unexpected character '" + std::string(1, c) + "'");
        }
        t.text = std::string(s.substr(start, i - start));
        col += i - start;
        out.push_back(std::move(t));
    }
    out.push_back({Token::Kind::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    Expr parse() {
        Expr e = expr();
        if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool at(char c) const { return peek().kind == Token::Kind::Symbol && peek().text[0] == c; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::SyntaxError,
                    std::to_string(peek().line) + ":" + std::to_string(peek().column) + ": " + msg);
    }

    void expect(char c) {
        if (!at(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Expr node(Expr::Kind k, const Token& where) {
        Expr e;
        e.kind = k;
        e.line = where.line;
        e.column = where.column;
        return e;
    }

    Expr binary(Expr::Kind k, const Token& op, Expr l, Expr r) {
        Expr e = node(k, op);
        e.args.push_back(std::move(l));
        e.args.push_back(std::move(r));
        return e;
    }

    Expr expr() {
        Expr l = term();
        while (at('+') || at('-')) {
            const Token& op = next();
            l = binary(op.text[0] == '+' ? Expr::Kind::Add : Expr::Kind::Sub, op, std::move(l), term());
        }
        return l;
    }

    Expr term() {
        Expr l = factor();
        while (at('*') || at('/')) {
            const Token& op = next();
            l = binary(op.text[0] == '*' ? Expr::Kind::Mul : Expr::Kind::Div, op, std::move(l), factor());
        }
        return l;
    }

    Expr factor() {
        if (at('-')) {
            Expr e = node(Expr::Kind::Neg, next());
            e.args.push_back(factor());
            return e;
        }
        Expr base = atom();
        if (!at('^')) return base;
        Expr e = node(Expr::Kind::Pow, next());
        bool neg = false;
        if (at('-')) {
            neg = true;
            ++pos_;
        }
        if (peek().kind != Token::Kind::Number) fail("expected an integer exponent");
        try {
            e.exponent = std::stol(next().text);
        } catch (const std::out_of_range&) {
            --pos_;
            fail("exponent out of range");
        }
        if (neg) e.exponent = -e.exponent;
        e.args.push_back(std::move(base));
        return e;
    }

    Expr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: {
                Expr e = node(Expr::Kind::Number, next());
                e.number = mpz_class(t.text);
                return e;
            }
            case Token::Kind::Ident: {
                next();
                if (t.text == "s") return node(Expr::Kind::Sigma, t);
                if (t.text == "T") return node(Expr::Kind::Var, t);
                Expr e = node(Expr::Kind::Call, t);
                e.name = t.text;
                if (!at('(')) return e;
                ++pos_;
                if (at(')')) {
                    ++pos_;
                    return e;
                }
                e.args.push_back(expr());
                while (at(',') || at(';')) {
                    ++pos_;
                    e.args.push_back(expr());
                }
                expect(')');
                return e;
            }
            case Token::Kind::Symbol:
                if (at('(')) {
                    ++pos_;
                    Expr e = expr();
                    expect(')');
                    return e;
                }
                fail("unexpected '" + t.text + "'");
            case Token::Kind::End:
                fail("unexpected end of input");
        }
        fail("unexpected token");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// -------------------------------------------------------------- rendering

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        default: return 5;
    }
}

std::string render_at(const Expr& e, int min_prec) {
    std::string body;
    switch (e.kind) {
        case Expr::Kind::Number: body = e.number.get_str(); break;
        case Expr::Kind::Sigma: body = "s"; break;
        case Expr::Kind::Var: body = "T"; break;
        case Expr::Kind::Neg: body = "-" + render_at(e.args[0], 3); break;
        case Expr::Kind::Add: body = render_at(e.args[0], 1) + " + " + render_at(e.args[1], 2); break;
        case Expr::Kind::Sub: body = render_at(e.args[0], 1) + " - " + render_at(e.args[1], 2); break;
        case Expr::Kind::Mul: body = render_at(e.args[0], 2) + "*" + render_at(e.args[1], 3); break;
        case Expr::Kind::Div: body = render_at(e.args[0], 2) + "/" + render_at(e.args[1], 3); break;
        case Expr::Kind::Pow: body = render_at(e.args[0], 5) + "^" + std::to_string(e.exponent); break;
        case Expr::Kind::Call: {
            body = e.name;
            if (e.args.empty()) break;
            const bool head_sep = e.name == "rat" || e.name == "alg" || e.name == "prepend";
            body += "(";
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (i > 0) body += (i == 1 && head_sep) ? "; " : ", ";
                body += render_at(e.args[i], 1);
            }
            body += ")";
            break;
        }
    }
    return precedence(e) < min_prec ? "(" + body + ")" : body;
}

// ------------------------------------------------------------- evaluation

[[noreturn]] void fail_at(const Expr& e, ErrorKind k, const std::string& msg) {
    throw Error(k, std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + msg);
}

struct RationalFn {
    SigmaPoly a, f;
};

// Divides out the common power of sigma so that F(0) != 0 when possible.
RationalFn drop_sigma(RationalFn r) {
    while (!r.f.is_zero() && r.f[0].is_zero() && (r.a.is_zero() || r.a[0].is_zero())) {
        r.f = exact_div(r.f, SigmaPoly::variable());
        if (!r.a.is_zero()) r.a = exact_div(r.a, SigmaPoly::variable());
    }
    return r;
}

class Evaluator {
public:
    explicit Evaluator(const EvalConfig& c) : cfg_(c) {}

    struct Value {
        std::optional<RationalFn> rational;
        std::optional<AlgebraicSeries> series;
    };

    AlgebraicSeries run(const Expr& e) { return to_series(eval(e), e); }

    Scalar lit(const mpz_class& v) const { return Scalar(mpq_class(v)).in(cfg_.field); }

    AnnPoly poly(const Expr& e) const {
        switch (e.kind) {
            case Expr::Kind::Number: return AnnPoly(SigmaPoly(lit(e.number)));
            case Expr::Kind::Sigma: return AnnPoly(SigmaPoly::monomial(lit(1), 1));
            case Expr::Kind::Var: return AnnPoly::monomial(SigmaPoly(lit(1)), 1);
            case Expr::Kind::Neg: return -poly(e.args[0]);
            case Expr::Kind::Add: return poly(e.args[0]) + poly(e.args[1]);
            case Expr::Kind::Sub: return poly(e.args[0]) - poly(e.args[1]);
            case Expr::Kind::Mul: return poly(e.args[0]) * poly(e.args[1]);
            case Expr::Kind::Div: {
                AnnPoly d = poly(e.args[1]);
                if (d.degree() != 0 || d[0].degree() != 0) {
                    fail_at(e, ErrorKind::InvalidArgument, "polynomials may only be divided by nonzero constants");
                }
                return exact_div(poly(e.args[0]), d[0]);
            }
            case Expr::Kind::Pow:
                if (e.exponent < 0) fail_at(e, ErrorKind::InvalidArgument, "negative power in a polynomial");
                return poly(e.args[0]).pow(static_cast<unsigned>(e.exponent));
            case Expr::Kind::Call: break;
        }
        fail_at(e, ErrorKind::InvalidArgument, "'" + e.name + "' is not allowed inside a polynomial");
    }

private:
    RationalFn rational_arg(const Expr& e) {
        Value v = eval(e);
        if (!v.rational) fail_at(e, ErrorKind::InvalidArgument, "expected a rational function of s");
        return *v.rational;
    }

    SigmaPoly polynomial_arg(const Expr& e) {
        RationalFn r = rational_arg(e);
        if (r.f.degree() != 0) fail_at(e, ErrorKind::InvalidArgument, "expected a polynomial in s");
        return r.a * r.f[0].inverse();
    }

    Scalar scalar_arg(const Expr& e) {
        SigmaPoly p = polynomial_arg(e);
        if (p.degree() > 0) fail_at(e, ErrorKind::InvalidArgument, "expected a constant");
        return p[0];
    }

    std::size_t count_arg(const Expr& e) {
        if (e.kind != Expr::Kind::Number || !e.number.fits_ulong_p()) {
            fail_at(e, ErrorKind::InvalidArgument, "expected a nonnegative integer literal");
        }
        return e.number.get_ui();
    }

    AlgebraicSeries to_series(const Value& v, const Expr& e) {
        if (v.series) return *v.series;
        RationalFn r = drop_sigma(*v.rational);
        if (r.f[0].is_zero()) fail_at(e, ErrorKind::DenominatorNotUnit, "denominator vanishes at s = 0");
        return rational_series(r.a, r.f, cfg_.order);
    }

    SigmaPoly in_field(const SigmaPoly& p) const {
        std::vector<Scalar> c;
        for (const auto& x : p.coeffs()) c.push_back(x.in(cfg_.field));
        return SigmaPoly(std::move(c));
    }

    Value rational(const SigmaPoly& a, const SigmaPoly& f) const {
        return Value{RationalFn{in_field(a), in_field(f)}, {}};
    }
    static Value series(AlgebraicSeries a) { return Value{{}, std::move(a)}; }

    void arity(const Expr& e, std::size_t lo, std::size_t hi) {
        if (e.args.size() < lo || e.args.size() > hi) {
            fail_at(e, ErrorKind::InvalidArgument, "wrong number of arguments to " + e.name);
        }
    }

    Value inverse(const Value& v, const Expr& e) {
        if (v.rational) {
            RationalFn r = drop_sigma(*v.rational);
            if (r.a.is_zero() || r.a[0].is_zero()) fail_at(e, ErrorKind::NotAUnit, "inverse of a non-unit");
            return rational(r.f, r.a);
        }
        return series(ann_inverse(*v.series));
    }

    Value power(const Value& v, long n, const Expr& e) {
        if (n < 0) return power(inverse(v, e), -n, e);
        if (v.rational) {
            auto k = static_cast<unsigned>(n);
            return rational(v.rational->a.pow(k), v.rational->f.pow(k));
        }
        if (n == 0) return rational(SigmaPoly(1), SigmaPoly(1));
        AlgebraicSeries acc = *v.series;
        for (long i = 1; i < n; ++i) acc = ann_product(acc, *v.series);
        return series(acc);
    }

    Value call(const Expr& e) {
        const std::string& n = e.name;
        if (n == "grandi") {
            arity(e, 0, 0);
            return rational(one_minus_sigma(), SigmaPoly{Scalar(1), Scalar(0), Scalar(-1)});
        }
        if (n == "geom") {
            arity(e, 1, 1);
            return rational(SigmaPoly(1), SigmaPoly{Scalar(1), -scalar_arg(e.args[0])});
        }
        if (n == "rat") {
            arity(e, 2, 2);
            RationalFn a = rational_arg(e.args[0]), f = rational_arg(e.args[1]);
            if (f.a.is_zero()) fail_at(e, ErrorKind::DivisionByZero, "zero denominator");
            RationalFn r = drop_sigma({a.a * f.f, a.f * f.a});
            if (r.f[0].is_zero()) fail_at(e, ErrorKind::DenominatorNotUnit, "denominator vanishes at s = 0");
            return rational(r.a, r.f);
        }
        if (n == "alg") {
            arity(e, 2, 1024);
            const AnnPoly p = poly(e.args[0]);
            std::vector<Scalar> seed;
            for (std::size_t i = 1; i < e.args.size(); ++i) seed.push_back(scalar_arg(e.args[i]));
            return series(make_algebraic(p, Series(std::move(seed)), cfg_.order));
        }
        if (n == "inv") {
            arity(e, 1, 1);
            return inverse(eval(e.args[0]), e);
        }
        if (n == "shiftl") {
            arity(e, 2, 2);
            return series(ann_tail_left(to_series(eval(e.args[0]), e.args[0]), count_arg(e.args[1])));
        }
        if (n == "prepend") {
            arity(e, 3, 3);
            AlgebraicSeries y = to_series(eval(e.args[0]), e.args[0]);
            return series(ann_tail_right(y, polynomial_arg(e.args[1]), count_arg(e.args[2])));
        }
        fail_at(e, ErrorKind::InvalidArgument, "unknown function '" + n + "'");
    }

    Value eval(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::Number: return rational(SigmaPoly(lit(e.number)), SigmaPoly(1));
            case Expr::Kind::Sigma: return rational(SigmaPoly::variable(), SigmaPoly(1));
            case Expr::Kind::Var: fail_at(e, ErrorKind::InvalidArgument, "T may only appear inside alg(...)");
            case Expr::Kind::Call: return call(e);
            case Expr::Kind::Pow: return power(eval(e.args[0]), e.exponent, e);
            case Expr::Kind::Neg: {
                Value v = eval(e.args[0]);
                if (v.rational) return rational(-v.rational->a, v.rational->f);
                return series(ann_negate(*v.series));
            }
            default: break;
        }
        Value l = eval(e.args[0]), r = eval(e.args[1]);
        if (l.rational && r.rational) {
            const RationalFn& x = *l.rational;
            const RationalFn& y = *r.rational;
            switch (e.kind) {
                case Expr::Kind::Add: return rational(x.a * y.f + y.a * x.f, x.f * y.f);
                case Expr::Kind::Sub: return rational(x.a * y.f - y.a * x.f, x.f * y.f);
                case Expr::Kind::Mul: return rational(x.a * y.a, x.f * y.f);
                case Expr::Kind::Div:
                    if (y.a.is_zero()) fail_at(e, ErrorKind::DivisionByZero, "division by zero");
                    return rational(x.a * y.f, x.f * y.a);
                default: break;
            }
        }
        const AlgebraicSeries a = to_series(l, e.args[0]), b = to_series(r, e.args[1]);
        switch (e.kind) {
            case Expr::Kind::Add: return series(ann_sum(a, b));
            case Expr::Kind::Sub: return series(ann_sum(a, ann_negate(b)));
            case Expr::Kind::Mul: return series(ann_product(a, b));
            case Expr::Kind::Div: return series(ann_product(a, ann_inverse(b)));
            default: break;
        }
        fail_at(e, ErrorKind::InvalidArgument, "unsupported expression");
    }

    EvalConfig cfg_;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(const Expr& e) { return render_at(e, 0); }

AlgebraicSeries evaluate(const Expr& e, const EvalConfig& config) { return Evaluator(config).run(e); }

AnnPoly parse_annpoly(std::string_view text, Field field) {
    EvalConfig cfg;
    cfg.field = field;
    return Evaluator(cfg).poly(parse_expr(text));
}

Series parse_stream(std::string_view text, Field field) {
    std::vector<Scalar> c;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        try {
            c.push_back(Scalar::parse(line.substr(b, e - b + 1)).in(field));
        } catch (const Error& err) {
            throw Error(err.kind(), "line " + std::to_string(lineno) + ": " + err.what());
        }
    }
    return Series(std::move(c));
}

}  // namespace sigmasum
