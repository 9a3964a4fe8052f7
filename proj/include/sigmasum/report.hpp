#pragma once

#include <string>

#include <json.hpp>

#include "sigmasum/addsum.hpp"
#include "sigmasum/algseries.hpp"
#include "sigmasum/error.hpp"

namespace sigmasum {

std::string_view to_string(Minimality m);

/// Certificate document. Polynomials and scalars are canonical strings; counts
/// are integers; absent facts are null.
nlohmann::ordered_json certificate_json(const std::string& input, const AlgebraicSeries& a,
                                         Field field = Field::rationals());

/// The same facts, one "key: value" line each.
std::string certificate_text(const nlohmann::ordered_json& cert);

/// {"error": {"kind": ..., "message": ...}}
nlohmann::ordered_json error_json(const Error& e);

}  // namespace sigmasum
