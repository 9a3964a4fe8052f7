#include "sigmasum/render.hpp"

#include <vector>

namespace sigmasum {

namespace {

bool is_negative(const Scalar& c) { return c.characteristic() == 0 && sgn(c.rational()) < 0; }

std::string power(char var, std::size_t k) {
    if (k == 0) return "";
    std::string s(1, var);
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

// |c| * var^k with unit coefficients elided: "3*s^2", "s", "1/2*s", "7".
std::string monomial_body(const Scalar& abs_c, char var, std::size_t k) {
    std::string v = power(var, k);
    if (v.empty()) return abs_c.to_string();
    if (abs_c.is_one()) return v;
    return abs_c.to_string() + "*" + v;
}

// Joins signed terms; `spaced` puts blanks around the binary operators.
std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms, bool spaced) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [neg, body] = terms[i];
        if (i == 0) {
            out += neg ? "-" + body : body;
        } else if (spaced) {
            out += neg ? " - " : " + ";
            out += body;
        } else {
            out += neg ? "-" : "+";
            out += body;
        }
    }
    return out;
}

template <class Var>
std::vector<std::pair<bool, std::string>> univariate_terms(const UPoly<Var>& p, bool descending) {
    std::vector<std::pair<bool, std::string>> terms;
    const std::size_t n = p.size();
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t k = descending ? n - 1 - j : j;
        const Scalar& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        bool neg = is_negative(c);
        terms.emplace_back(neg, monomial_body(neg ? -c : c, Var::symbol, k));
    }
    return terms;
}

}  // namespace

std::string to_string(const SigmaPoly& p) { return join_terms(univariate_terms(p, false), false); }

std::string to_string(const ScalarPolynomial& p) { return join_terms(univariate_terms(p, true), true); }

std::string to_string(const AnnPoly& p) {
    std::vector<std::pair<bool, std::string>> terms;
    for (std::size_t j = 0; j < p.size(); ++j) {
        std::size_t k = p.size() - 1 - j;
        const SigmaPoly& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        std::string t = power('T', k);
        auto parts = univariate_terms(c, false);
        if (parts.size() == 1) {
            auto [neg, body] = parts.front();
            if (!t.empty()) body = (body == "1") ? t : body + "*" + t;
            terms.emplace_back(neg, body);
        } else {
            std::string body = "(" + to_string(c) + ")";
            if (!t.empty()) body += "*" + t;
            terms.emplace_back(false, body);
        }
    }
    return join_terms(terms, true);
}

std::string to_string(const Series& x, std::size_t max_terms) {
    std::vector<std::pair<bool, std::string>> terms;
    const std::size_t n = std::min(max_terms, x.order());
    for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = x[k];
        if (c.is_zero()) continue;
        bool neg = is_negative(c);
        terms.emplace_back(neg, monomial_body(neg ? -c : c, 's', k));
    }
    std::string out = terms.empty() ? "0" : join_terms(terms, true);
    return out + " + O(" + (n == 0 ? std::string("1") : power('s', n)) + ")";
}

}  // namespace sigmasum
