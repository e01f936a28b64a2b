// grsets: exact arithmetic in the Grothendieck ring of weighted orbit
// sets with stabilizer characters, and equivariant Poincare series of
// multi-index filtrations via the stratum product formula.
//
// Exit codes: 0 success, 1 semantic error, 2 I/O or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "grsets/json_io.hpp"
#include "grsets/selftest.hpp"

namespace {

using namespace grsets;

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot read file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

Bound parse_bound(const std::string& text, int r) {
    Bound bound;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size())
                throw std::invalid_argument(part);
            bound.push_back(v);
        } catch (const std::exception&) {
            throw error("bound entries must be integers: " + text);
        }
    }
    if (static_cast<int>(bound.size()) != r)
        throw error("bound override must have " + std::to_string(r) + " entries");
    for (int v : bound)
        if (v < 0)
            throw error("bound entries must be nonnegative");
    return bound;
}

ResolutionSpec resolve_spec(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        ResolutionSpec spec = io::parse_spec(load_json(arg));
        if (spec.name.empty())
            spec.name = std::filesystem::path(arg).stem().string();
        return spec;
    }
    for (const ResolutionSpec& s : builtin_specs())
        if (s.name == arg)
            return s;
    throw parse_error("no such file or built-in spec: " + arg);
}

void print_ring_element(const RingElement& e, const std::string& format) {
    if (format == "json")
        std::cout << io::ring_element_to_json(e).dump(2) << "\n";
    else
        std::cout << io::render_ring_element(e) << "\n";
}

int cmd_poincare(const std::string& spec_arg, const std::string& bound_str,
                 const std::string& project, const std::string& format, bool format_given) {
    ResolutionSpec spec = resolve_spec(spec_arg);
    Bound bound = bound_str.empty() ? spec.bound : parse_bound(bound_str, spec.r);
    RingElement p = poincare_series(spec, bound);

    if (project.empty()) {
        if (format == "series")
            throw error("--format series requires --project");
        print_ring_element(p, format);
        return 0;
    }
    if (format_given && format == "orbits")
        throw error("--format orbits cannot render a projection");
    if (project == "pi") {
        MultiIndexSeries s = project_pi(p);
        if (format == "json")
            std::cout << io::series_to_json(s).dump(2) << "\n";
        else
            std::cout << s.to_string() << "\n";
        return 0;
    }
    EquivariantSeries s = project_pi_prime(p);
    if (format == "json")
        std::cout << io::series_to_json(s).dump(2) << "\n";
    else
        std::cout << s.to_string() << "\n";
    return 0;
}

int cmd_ring(const std::string& path, const std::string& format) {
    RingElement e = io::eval_expression(load_json(path));
    if (format == "series")
        throw error("ring renders as orbits or json");
    print_ring_element(e, format);
    return 0;
}

int cmd_project(const std::string& path, const std::string& to, const std::string& format) {
    RingElement e = io::parse_ring_element(load_json(path));
    if (to == "pi") {
        MultiIndexSeries s = project_pi(e);
        if (format == "json")
            std::cout << io::series_to_json(s).dump(2) << "\n";
        else
            std::cout << s.to_string() << "\n";
    } else {
        EquivariantSeries s = project_pi_prime(e);
        if (format == "json")
            std::cout << io::series_to_json(s).dump(2) << "\n";
        else
            std::cout << s.to_string() << "\n";
    }
    return 0;
}

int cmd_selftest(const std::string& filter) {
    const auto results = selftest::run_checks(filter);
    if (results.empty()) {
        std::cerr << "no checks match filter: " << filter << "\n";
        return 0;
    }
    bool all_ok = true;
    for (const auto& res : results) {
        std::cout << (res.passed ? "[PASS] " : "[FAIL] ") << res.name;
        if (!res.detail.empty())
            std::cout << ": " << res.detail;
        std::cout << "\n";
        all_ok = all_ok && res.passed;
    }
    std::cout << (all_ok ? "selftest passed" : "selftest FAILED") << " (" << results.size()
              << " checks)\n";
    return all_ok ? 0 : 1;
}

int cmd_examples(const std::string& emit_dir) {
    if (emit_dir.empty()) {
        for (const ResolutionSpec& s : builtin_specs())
            std::cout << s.name << " ("
                      << (s.kind == FiltrationKind::divisorial ? "divisorial" : "curve") << ", "
                      << s.strata.size() << " strata)\n";
        return 0;
    }
    std::error_code ec;
    std::filesystem::create_directories(emit_dir, ec);
    if (ec)
        throw parse_error("cannot create directory: " + emit_dir);
    for (const ResolutionSpec& s : builtin_specs()) {
        const std::string path = (std::filesystem::path(emit_dir) / (s.name + ".json")).string();
        std::ofstream out(path);
        if (!out)
            throw parse_error("cannot write file: " + path);
        out << io::spec_to_json(s).dump(2) << "\n";
        std::cout << path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant Poincare series over the Grothendieck ring of weighted "
                 "orbit sets"};
    app.require_subcommand(1);

    std::string spec_arg, bound_str, project, poincare_format = "orbits";
    auto* poincare = app.add_subcommand(
        "poincare", "evaluate the stratum product formula from a spec file or built-in name");
    poincare->add_option("spec", spec_arg, "spec file path or built-in name")->required();
    poincare->add_option("--bound", bound_str, "override bound, comma separated");
    poincare->add_option("--project", project, "project the result")
        ->check(CLI::IsMember({"pi", "pi-prime"}));
    poincare->add_option("--format", poincare_format, "output format")
        ->check(CLI::IsMember({"orbits", "series", "json"}));

    std::string expr_path, ring_format = "orbits";
    auto* ring = app.add_subcommand("ring", "evaluate a ring expression file");
    ring->add_option("expr", expr_path, "expression file")->required();
    ring->add_option("--format", ring_format, "output format")
        ->check(CLI::IsMember({"orbits", "json"}));

    std::string elem_path, project_to = "pi", project_format = "series";
    auto* project_cmd = app.add_subcommand("project", "project a ring element file");
    project_cmd->add_option("element", elem_path, "ring element file")->required();
    project_cmd->add_option("--to", project_to, "target projection")
        ->check(CLI::IsMember({"pi", "pi-prime"}));
    project_cmd->add_option("--format", project_format, "output format")
        ->check(CLI::IsMember({"series", "json"}));

    std::string filter;
    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in verification suite");
    selftest_cmd->add_option("--filter", filter, "run only checks whose name contains this");

    std::string emit_dir;
    auto* examples = app.add_subcommand("examples", "list or export the built-in specs");
    examples->add_option("--emit", emit_dir, "write spec JSON files into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (poincare->parsed())
            return cmd_poincare(spec_arg, bound_str, project, poincare_format,
                                poincare->count("--format") > 0);
        if (ring->parsed())
            return cmd_ring(expr_path, ring_format);
        if (project_cmd->parsed())
            return cmd_project(elem_path, project_to, project_format);
        if (selftest_cmd->parsed())
            return cmd_selftest(filter);
        if (examples->parsed())
            return cmd_examples(emit_dir);
    } catch (const grsets::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const grsets::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
