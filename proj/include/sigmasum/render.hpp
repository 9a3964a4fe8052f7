#pragma once

#include <string>

#include "sigmasum/annpoly.hpp"
#include "sigmasum/series.hpp"

namespace sigmasum {

// Canonical text forms. Every rendering parses back to the same value.

/// Ascending powers, compact: "1-s^2", "2-1/4*s", "0".
std::string to_string(const SigmaPoly& p);
/// Descending powers, spaced: "t^2 - 3", "t - 1/2", "1".
std::string to_string(const ScalarPolynomial& p);
/// Descending powers of T with parenthesized sigma coefficients: "(1+s)*T - 1".
std::string to_string(const AnnPoly& p);
/// Known coefficients as a truncated polynomial: "1 - s + s^2 + O(s^3)".
std::string to_string(const Series& x, std::size_t max_terms = 8);

}  // namespace sigmasum
