#include "commands.hpp"

#include "sigmasum/addsum.hpp"
#include "sigmasum/closure.hpp"
#include "sigmasum/expr.hpp"
#include "sigmasum/guess.hpp"
#include "sigmasum/render.hpp"
#include "sigmasum/report.hpp"

namespace sigmasum::cli {

namespace {

using json = nlohmann::ordered_json;

AlgebraicSeries evaluate_text(const Request& r, std::string& canonical) {
    const Expr e = parse_expr(r.text);
    canonical = render(e);
    return evaluate(e, {r.field, r.order});
}

json scalarpoly(const Request& r) {
    std::string canonical;
    const AlgebraicSeries a = evaluate_text(r, canonical);
    const RootReport roots = zeroes(a);
    json j;
    j["input"] = canonical;
    j["annihilator"] = to_string(a.ann());
    j["scalar_poly"] = to_string(scalar_polynomial(a));
    json list = json::array();
    for (const auto& root : roots.roots) {
        json item;
        item["value"] = root.value.to_string();
        item["multiplicity"] = root.multiplicity;
        list.push_back(item);
    }
    j["roots"] = list;
    j["cofactor"] = to_string(roots.cofactor);
    j["complete"] = roots.complete;
    j["minimality"] = to_string(a.minimality());
    j["order"] = a.certified_order();
    return j;
}

json telescope(const Request& r) {
    const Series x = parse_stream(r.text, r.field);
    json j;
    j["input"] = r.label;
    j["order"] = x.order();
    const auto t = detect_telescope(x, r.max_denominator_degree);
    if (!t) {
        j["numerator"] = nullptr;
        j["denominator"] = nullptr;
        j["value"] = nullptr;
        return j;
    }
    j["numerator"] = to_string(t->numerator);
    j["denominator"] = to_string(t->denominator);
    j["value"] = telescope_eval(t->numerator, t->denominator).to_string();
    return j;
}

json guess(const Request& r) {
    const Series x = parse_stream(r.text, r.field);
    GuessBounds b;
    b.max_t_degree = r.max_t_degree;
    b.max_sigma_degree = r.max_sigma_degree;
    b.order_used = x.order() / 2;
    b.certify_order = x.order();
    const auto p = guess_annihilator(x, b);
    if (p) return certificate_json(r.label, from_relation(*p, x), r.field);
    json j;
    j["input"] = r.label;
    j["annihilator"] = nullptr;
    j["class"] = std::string(to_string(SeriesClass::NoRelationKnown));
    j["order"] = x.order();
    j["status"] = std::string(to_string(SumStatus::NoRelationKnown));
    return j;
}

}  // namespace

json run(const Request& r, bool& ok) {
    ok = true;
    try {
        if (r.command == "sum" || r.command == "classify") {
            std::string canonical;
            const AlgebraicSeries a = evaluate_text(r, canonical);
            return certificate_json(canonical, a, r.field);
        }
        if (r.command == "scalarpoly") return scalarpoly(r);
        if (r.command == "telescope") return telescope(r);
        if (r.command == "guess") return guess(r);
        throw Error(ErrorKind::InvalidArgument, "unknown command '" + r.command + "'");
    } catch (const Error& e) {
        ok = false;
        return error_json(e);
    }
}

std::string human(const std::string& command, const json& result) {
    if (result.contains("error")) {
        return "error (" + result["error"]["kind"].get<std::string>() +
               "): " + result["error"]["message"].get<std::string>() + "\n";
    }
    std::string head;
    if (command == "sum") {
        head = result["value"].is_string() ? "sum: " + result["value"].get<std::string>() + "\n"
                                           : "no sum: " + result["status"].get<std::string>() + "\n";
    } else if (command == "classify") {
        head = "class: " + result["class"].get<std::string>() + "\n";
    }
    if (command == "scalarpoly") {
        std::string out = "scalar_poly: " + result["scalar_poly"].get<std::string>() + "\n";
        std::string roots;
        for (const auto& root : result["roots"]) {
            roots += (roots.empty() ? "" : ", ") + root["value"].get<std::string>();
            if (root["multiplicity"].get<std::size_t>() > 1) roots += " (x" + root["multiplicity"].dump() + ")";
        }
        out += "roots in K: " + (roots.empty() ? std::string("none") : roots) + "\n";
        if (result["cofactor"].get<std::string>() != "1") {
            out += "unfactored: " + result["cofactor"].get<std::string>() + "\n";
        }
        return out;
    }
    return head + certificate_text(result);
}

}  // namespace sigmasum::cli
