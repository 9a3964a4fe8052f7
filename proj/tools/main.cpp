#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"

namespace fs = std::filesystem;
using sigmasum::cli::Request;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw sigmasum::Error(sigmasum::ErrorKind::InvalidArgument, "cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct CorpusCase {
    fs::path expr_file;
    Request request;
    std::string expected;
    std::string actual;
    bool matched = false;
    std::string problem;
};

// Directive lines start with '@'; everything else (minus '#' comments) is the expression.
Request read_case(const fs::path& file, const Request& defaults) {
    Request r = defaults;
    r.command = "sum";
    r.label = file.stem().string();
    std::istringstream in(slurp(file));
    std::string line, expr;
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        if (line[b] != '@') {
            expr += line.substr(b) + "\n";
            continue;
        }
        std::istringstream d(line.substr(b + 1));
        std::string key, value;
        d >> key >> value;
        if (key == "command") r.command = value;
        else if (key == "order") r.order = std::stoul(value);
        else if (key == "field") r.field = sigmasum::Field::parse(value);
        else if (key == "dT") r.max_t_degree = std::stoul(value);
        else if (key == "ds") r.max_sigma_degree = std::stoul(value);
        else if (key == "dF") r.max_denominator_degree = std::stoul(value);
        else if (key == "stream") {
            expr = slurp(file.parent_path() / value);
            r.label = value;
        } else {
            throw sigmasum::Error(sigmasum::ErrorKind::InvalidArgument, file.string() + ": unknown directive @" + key);
        }
    }
    r.text = expr;
    return r;
}

int run_corpus(const fs::path& dir, const Request& defaults, bool update, std::size_t jobs) {
    std::vector<CorpusCase> cases;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".expr") cases.push_back({entry.path(), {}, {}, {}, false, {}});
    }
    std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.expr_file < b.expr_file; });

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cases.size();) {
            CorpusCase& c = cases[i];
            try {
                c.request = read_case(c.expr_file, defaults);
                bool ok = false;
                c.actual = sigmasum::cli::run(c.request, ok).dump(2) + "\n";
                fs::path expected = c.expr_file;
                expected.replace_extension(".expected.json");
                if (update) {
                    std::ofstream(expected) << c.actual;
                    c.matched = true;
                } else if (!fs::exists(expected)) {
                    c.problem = "missing " + expected.filename().string();
                } else {
                    c.expected = slurp(expected);
                    c.matched = nlohmann::json::parse(c.expected) == nlohmann::json::parse(c.actual);
                }
            } catch (const std::exception& e) {
                c.problem = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < std::max<std::size_t>(1, jobs); ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::size_t failed = 0;
    for (const auto& c : cases) {
        const std::string name = c.expr_file.filename().string();
        if (c.matched) {
            std::cout << (update ? "WROTE " : "PASS ") << name << "\n";
            continue;
        }
        ++failed;
        std::cout << "FAIL " << name << "\n";
        if (!c.problem.empty()) {
            std::cout << "  " << c.problem << "\n";
        } else {
            std::cout << "  expected: " << nlohmann::json::parse(c.expected).dump() << "\n"
                      << "  actual:   " << nlohmann::json::parse(c.actual).dump() << "\n";
        }
    }
    std::cout << cases.size() - failed << "/" << cases.size() << " corpus cases match\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact summation of divergent formal power series"};
    app.require_subcommand(1);

    Request defaults;
    std::string field = "q";
    bool as_json = false;
    app.add_option("--order", defaults.order, "Truncation order of expansions")
        ->envname("SIGMASUM_ORDER")
        ->capture_default_str();
    app.add_option("--field", field, "Coefficient field: q or fp:<p>")->envname("SIGMASUM_FIELD")->capture_default_str();
    app.add_option("--dT", defaults.max_t_degree, "Largest T-degree tried by guess")
        ->envname("SIGMASUM_DT")
        ->capture_default_str();
    app.add_option("--ds", defaults.max_sigma_degree, "Largest s-degree tried by guess")
        ->envname("SIGMASUM_DS")
        ->capture_default_str();
    app.add_option("--dF", defaults.max_denominator_degree, "Largest denominator degree tried by telescope")
        ->envname("SIGMASUM_DF")
        ->capture_default_str();
    app.add_flag("--json", as_json, "Emit JSON")->envname("SIGMASUM_JSON");
    app.fallthrough();

    std::string expression, stream_file, corpus_dir;
    for (const char* name : {"sum", "classify", "scalarpoly"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + " a series expression");
        sub->add_option("expression", expression, "Series expression, e.g. \"rat(1-s; 1-s^2)\"")->required();
    }
    app.get_subcommand("sum")->description("Sum a series with the univalent extension");
    app.get_subcommand("classify")->description("Classify a series as algebraic or infinite");
    app.get_subcommand("scalarpoly")->description("Scalar polynomial and its roots in K");
    for (const char* name : {"telescope", "guess"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("stream", stream_file, "Coefficient file, one rational per line")->required()->check(CLI::ExistingFile);
    }
    app.get_subcommand("telescope")->description("Find F with F*X a polynomial and sum by telescoping");
    app.get_subcommand("guess")->description("Find an annihilator of a coefficient stream");
    bool update = false;
    std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* corpus = app.add_subcommand("corpus", "Check .expr cases against .expected.json files");
    corpus->add_option("directory", corpus_dir)->required()->check(CLI::ExistingDirectory);
    corpus->add_flag("--update", update, "Rewrite the expected files instead of checking");
    corpus->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        defaults.field = sigmasum::Field::parse(field);
    } catch (const sigmasum::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "corpus") return run_corpus(corpus_dir, defaults, update, jobs);

    Request r = defaults;
    r.command = command;
    if (command == "telescope" || command == "guess") {
        r.text = slurp(stream_file);
        r.label = fs::path(stream_file).filename().string();
    } else {
        r.text = expression;
        r.label = expression;
    }
    bool ok = false;
    const auto result = sigmasum::cli::run(r, ok);
    if (as_json) {
        std::cout << result.dump(2) << "\n";
    } else {
        (ok ? std::cout : std::cerr) << sigmasum::cli::human(command, result);
    }
    return ok ? 0 : 2;
}
