#include "sigmasum/report.hpp"

#include "sigmasum/render.hpp"

namespace sigmasum {

std::string_view to_string(Minimality m) {
    return m == Minimality::Certified ? "certified" : "up_to_divisibility";
}

nlohmann::ordered_json certificate_json(const std::string& input, const AlgebraicSeries& a,
                                         Field field) {
    const Classification c = classify(a);
    const SumResult sum = univalent_sum(a);
    nlohmann::ordered_json j;
    j["input"] = input;
    j["annihilator"] = to_string(a.ann());
    j["stripped_power"] = a.stripped_power();
    j["scalar_poly"] = to_string(c.scalar_poly);
    j["class"] = to_string(c.kind);
    j["sum_degree"] = c.sum_degree;
    j["scalar_degree"] = c.scalar_degree;
    j["univalent"] = c.univalent.has_value();
    j["root"] = c.univalent ? nlohmann::ordered_json(c.univalent->root.to_string()) : nullptr;
    j["multiplicity"] = c.univalent ? nlohmann::ordered_json(c.univalent->multiplicity) : nullptr;
    j["absolutely_algebraic"] =
        c.absolutely_algebraic ? nlohmann::ordered_json(*c.absolutely_algebraic) : nullptr;
    j["practically_zero"] = c.practically_zero ? nlohmann::ordered_json(*c.practically_zero) : nullptr;
    j["minimality"] = to_string(a.minimality());
    j["value"] = sum.value ? nlohmann::ordered_json(sum.value->to_string()) : nullptr;
    j["order"] = a.certified_order();
    j["status"] = to_string(sum.status);
    nlohmann::ordered_json seed = nlohmann::ordered_json::array();
    const Series head = a.seed();
    for (const auto& s : head.coeffs()) seed.push_back(s.to_string());
    j["seed"] = seed;
    j["field"] = field.to_string();
    return j;
}

std::string certificate_text(const nlohmann::ordered_json& cert) {
    std::string out;
    for (const auto& [key, value] : cert.items()) {
        out += key + ": ";
        if (value.is_string()) {
            out += value.get<std::string>();
        } else if (value.is_null()) {
            out += "-";
        } else if (value.is_array()) {
            std::string items;
            for (const auto& v : value) items += (items.empty() ? "" : ", ") + v.get<std::string>();
            out += "[" + items + "]";
        } else {
            out += value.dump();
        }
        out += "\n";
    }
    return out;
}

nlohmann::ordered_json error_json(const Error& e) {
    nlohmann::ordered_json j;
    j["error"]["kind"] = std::string(to_string(e.kind()));
    j["error"]["message"] = e.what();
    return j;
}

}  // namespace sigmasum
