// Command-line front end: harmonic tables, structure-constant tables, and
// the named verification suites.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dunkl/serialize.hpp"
#include "dunkl/verify.hpp"

namespace {

struct run_config {
    int nvars = 3;
    std::string kappa = "symbolic";
    int max_degree = 6;
    std::string format = "json";
    std::string suite = "all";
    std::string out;
};

std::optional<dunkl::rational> parse_kappa_option(const std::string& text) {
    if (text == "symbolic") return std::nullopt;
    try {
        return dunkl::parse_rational(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError(
            "--kappa expects 'symbolic' or an exact rational like -7/3 "
            "(decimals are rejected, not rounded)");
    }
}

void write_output(const run_config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
    f << text;
}

dunkl::dunkl_context make_context(const run_config& cfg) {
    dunkl::dunkl_context ctx(cfg.nvars, cfg.max_degree,
                             parse_kappa_option(cfg.kappa));
    if (auto w = ctx.parameter_warning()) std::cerr << "warning: " << *w << "\n";
    return ctx;
}

int cmd_harmonics(const run_config& cfg) {
    dunkl::dunkl_context ctx = make_context(cfg);
    std::vector<std::pair<int, dunkl::symmetry_type>> indices;
    for (int n = 0; n <= cfg.max_degree; ++n) {
        indices.emplace_back(n, dunkl::symmetry_type::symmetric);
        if (n >= 1) indices.emplace_back(n, dunkl::symmetry_type::antisymmetric);
    }
    if (cfg.format == "json") {
        dunkl::json arr = dunkl::json::array();
        for (auto [n, sym] : indices)
            arr.push_back(dunkl::harmonic_entry_json(ctx, n, sym));
        write_output(cfg, arr.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "n,sign,j,coeff\n";
        for (auto [n, sym] : indices) {
            dunkl::json entry = dunkl::harmonic_entry_json(ctx, n, sym);
            if (entry.contains("error")) {
                os << n << "," << dunkl::symmetry_char(sym) << ",,"
                   << "error: " << entry["error"].get<std::string>() << "\n";
                continue;
            }
            for (const auto& e : entry["basis"])
                os << n << "," << dunkl::symmetry_char(sym) << "," << e["j"] << ","
                   << e["coeff"].get<std::string>() << "\n";
        }
        write_output(cfg, os.str());
    }
    return 0;
}

int cmd_constants(const run_config& cfg) {
    dunkl::dunkl_context ctx = make_context(cfg);
    std::vector<dunkl::constants_row> rows;
    for (int n = 0; n <= cfg.max_degree; ++n) {
        rows.push_back(dunkl::make_constants_row(ctx, n, dunkl::symmetry_type::symmetric));
        if (n >= 1)
            rows.push_back(
                dunkl::make_constants_row(ctx, n, dunkl::symmetry_type::antisymmetric));
    }
    if (cfg.format == "json") {
        dunkl::json arr = dunkl::json::array();
        for (const auto& r : rows) arr.push_back(dunkl::to_json(r));
        write_output(cfg, arr.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "N,n,sign,kappa_norm,sphere_factor,sphere_norm\n";
        for (const auto& r : rows) {
            if (!r.error.empty()) {
                os << r.nvars << "," << r.n << "," << r.sign << ",error: " << r.error
                   << ",,\n";
                continue;
            }
            os << r.nvars << "," << r.n << "," << r.sign << "," << r.kappa_norm << ","
               << r.sphere_factor << "," << r.sphere_norm << "\n";
        }
        write_output(cfg, os.str());
    }
    return 0;
}

int cmd_verify(const run_config& cfg) {
    dunkl::verify::options opt;
    opt.nvars = cfg.nvars;
    opt.max_degree = cfg.max_degree;
    opt.kappa = parse_kappa_option(cfg.kappa);

    std::vector<std::string> suites;
    if (cfg.suite == "all" || cfg.suite == "default") {
        suites = dunkl::verify::suite_names();
    } else {
        std::stringstream ss(cfg.suite);
        std::string item;
        while (std::getline(ss, item, ',')) suites.push_back(item);
    }

    std::ostringstream os;
    int failures = 0, total = 0;
    for (const auto& name : suites) {
        for (const auto& r : dunkl::verify::run_suite(name, opt)) {
            ++total;
            if (!r.pass) ++failures;
            os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
            if (!r.detail.empty()) os << " (" << r.detail << ")";
            os << "\n";
        }
    }
    os << total - failures << "/" << total << " checks passed\n";
    write_output(cfg, os.str());
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact planar harmonic and monogenic polynomial tables for the "
                 "symmetric-group Dunkl operators"};
    app.require_subcommand(1);

    run_config cfg;
    auto add_common = [&](CLI::App* sub, bool with_suite) {
        sub->add_option("--n-vars", cfg.nvars, "number of variables (>= 2)")
            ->check(CLI::Range(2, 16));
        sub->add_option("--kappa", cfg.kappa,
                        "'symbolic' or an exact rational such as 1/2");
        sub->add_option("--max-degree", cfg.max_degree, "largest degree emitted")
            ->check(CLI::Range(0, 24))
            ->envname("DUNKL_PLANAR_MAX_DEGREE");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        if (with_suite)
            sub->add_option("--suite", cfg.suite,
                            "comma-separated suite list, or 'all'");
    };

    CLI::App* harmonics =
        app.add_subcommand("harmonics", "emit the harmonic family tables");
    add_common(harmonics, false);
    CLI::App* constants =
        app.add_subcommand("constants", "emit the structure-constant tables");
    add_common(constants, false);
    CLI::App* verify =
        app.add_subcommand("verify", "run the identity verification suites");
    add_common(verify, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (harmonics->parsed()) return cmd_harmonics(cfg);
        if (constants->parsed()) return cmd_constants(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
