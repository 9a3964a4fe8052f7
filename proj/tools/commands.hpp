#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "sigmasum/scalar.hpp"

namespace sigmasum::cli {

struct Request {
    /// sum | classify | scalarpoly | telescope | guess
    std::string command;
    /// Expression text, or the contents of a coefficient stream.
    std::string text;
    /// Shown as "input" in the output.
    std::string label;
    Field field = Field::rationals();
    std::size_t order = 64;
    std::size_t max_t_degree = 2;
    std::size_t max_sigma_degree = 2;
    std::size_t max_denominator_degree = 4;
};

/// Runs one command; library errors become {"error": {...}} documents.
/// `ok` is false when the result is an error document.
nlohmann::ordered_json run(const Request& r, bool& ok);

/// Human-readable form of a result document.
std::string human(const std::string& command, const nlohmann::ordered_json& result);

}  // namespace sigmasum::cli
