// Command-line front end for the C*-module inequality toolkit.
//
// Subcommands: cx, scan, search, l2, group. Exit codes: 0 ok, 1 parse or
// config error, 2 tolerance violation, 3 domain error (singular, zero or
// non-normalized input), 4 unwritable output path.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cstar/continuous_l2.hpp"
#include "cstar/exact_constant.hpp"
#include "cstar/group_integral.hpp"
#include "cstar/modulus_search.hpp"
#include "cstar/scan.hpp"
#include "cstar/serialization.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cstar::ParseError("cannot read input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Empty path means stdout.
void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cstar::IoError("cannot open output path: " + path);
    out << text;
    out.flush();
    if (!out) throw cstar::IoError("write failed: " + path);
}

int run_cx(const std::string& input, const cstar::ToleranceConfig& tol,
           const std::string& out_path) {
    const cstar::ModuleVector x = cstar::module_vector_from_json(read_file(input));
    const cstar::ConstantReport report = cstar::verify_exact_constant_identity(x, tol);
    write_output(cstar::to_json(report), out_path);

    const double gram_norm = cstar::frobenius_norm(cstar::inner_product(x, x));
    const double scale =
        1.0 + 2.0 * std::sqrt(static_cast<double>(x.n()) * x.k()) * gram_norm;
    if (report.residual_identity > tol.eq_tol * scale ||
        report.residual_defs_match > tol.eq_tol * scale) {
        return 2;
    }
    return 0;
}

int run_search(const std::string& input, const cstar::SearchConfig& cfg,
               const cstar::ToleranceConfig& tol, const std::string& out_path) {
    const cstar::ModuleVector x = cstar::module_vector_from_json(read_file(input));
    const cstar::SearchResult result = cstar::search_min_distance(x, cfg, tol);
    write_output(cstar::to_json(result), out_path);
    return 0;
}

int run_l2(const std::string& input, int trials, std::uint64_t seed,
           const cstar::ToleranceConfig& tol, const std::string& out_path) {
    const std::string text = read_file(input);
    const json parsed = [&] {
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            throw cstar::ParseError("byte " + std::to_string(e.byte) + ": " + e.what());
        }
    }();
    if (!parsed.is_object() || !parsed.contains("weights")) {
        throw cstar::ParseError("l2 input needs a \"weights\" array");
    }
    const auto space = std::make_shared<const cstar::FiniteMeasureSpace>(
        cstar::measure_space_from_json(text));

    json report = json::object();
    bool violation = false;

    std::optional<cstar::L2Function> f;
    if (parsed.contains("values")) {
        f.emplace(cstar::l2_function_from_json(space, text));
        const cstar::L2ConstantReport r = cstar::verify_l2_exact_constant(*f, tol);
        report["function"] = json::parse(cstar::to_json(r));
        violation |= r.norm_identity_residual > tol.eq_tol ||
                     r.distance_identity_residual > tol.eq_tol ||
                     std::abs(r.cf - r.cf_closed_form) > tol.eq_tol;
    }

    std::optional<cstar::SubspaceProjector> projector;
    if (parsed.contains("basis")) {
        if (!parsed["basis"].is_array() || parsed["basis"].empty()) {
            throw cstar::ParseError("\"basis\" must be a nonempty array of value arrays");
        }
        std::vector<cstar::L2Function> raw;
        for (const json& b : parsed["basis"]) {
            raw.push_back(cstar::l2_function_from_json(space, json{{"values", b}}.dump()));
        }
        projector.emplace(cstar::SubspaceProjector::orthonormalize(space, raw, tol));
        const cstar::SubspaceIdentityReport r =
            cstar::verify_subspace_identities(*projector, trials, seed, tol);
        report["subspace"] = json::parse(cstar::to_json(r));
        violation |= r.max_residual_unit_distance > tol.eq_tol ||
                     r.max_residual_projection > tol.eq_tol;
    }

    if (f && projector) {
        // Normalize h, project, and check ||Ph/||Ph|| - h||^2 = 2 - 2 ||Ph||.
        const double h_norm = cstar::l2_norms(*f).two_norm;
        if (h_norm <= tol.inv_tol) throw cstar::ZeroFunction("l2: input function is zero");
        std::vector<cstar::Complex> unit(f->values);
        for (cstar::Complex& v : unit) v /= h_norm;
        const cstar::L2Function h(space, std::move(unit));
        const cstar::L2Function closest = cstar::closest_unit_in_subspace(h, *projector, tol);
        const double pnorm = cstar::l2_norms(projector->project(h)).two_norm;
        double dist_sq = 0.0;
        for (int j = 0; j < h.size(); ++j) {
            dist_sq += space->weight(j) *
                       std::norm(closest.values[static_cast<size_t>(j)] -
                                 h.values[static_cast<size_t>(j)]);
        }
        const double residual = std::abs(dist_sq - (2.0 - 2.0 * pnorm));
        report["closest_unit"] = json{{"distance_sq", dist_sq},
                                      {"projection_norm", pnorm},
                                      {"identity_residual", residual}};
        violation |= residual > tol.eq_tol;
    }

    if (report.empty()) {
        throw cstar::ParseError("l2 input needs \"values\" and/or \"basis\"");
    }
    write_output(report.dump(), out_path);
    return violation ? 2 : 0;
}

int run_group(const std::string& input, const cstar::ToleranceConfig& tol,
              const std::string& out_path) {
    const cstar::GroupFunction f = cstar::group_function_from_json(read_file(input), tol);
    const cstar::GroupMeanReport report = cstar::verify_group_mean_identity(f, tol);
    write_output(cstar::to_json(report), out_path);
    return report.residual > tol.eq_tol ? 2 : 0;
}

int run_scan(cstar::ScanConfig cfg, const std::string& out_path, cstar::ScanFormat format) {
    cfg.format = format;
    cfg.output_path =
        out_path.empty() ? (format == cstar::ScanFormat::csv ? "scan.csv" : "scan.json")
                         : out_path;
    const std::vector<cstar::ScanRow> rows = cstar::run_scan(cfg);
    const std::string text = format == cstar::ScanFormat::csv ? cstar::rows_to_csv(rows)
                                                              : cstar::rows_to_json(rows);
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw cstar::IoError("cannot open output path: " + cfg.output_path);
    out << text;
    out.flush();
    if (!out) throw cstar::IoError("write failed: " + cfg.output_path);

    const cstar::ScanSummary summary = cstar::summarize(rows);
    std::cout << cstar::summary_line(summary) << "\n";
    return summary.tolerance_violation > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noncommutative l1-l2 inequality toolkit over matrix algebras"};
    app.require_subcommand(1);

    double tol_eq = 1e-8;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format_name = "json";
    auto* tol_opt = app.add_option("--tol", tol_eq, "Identity tolerance (eq_tol); others scale");
    tol_opt->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "64-bit seed")->envname("CSTAR_SHARP_SEED");
    app.add_option("--out", out_path, "Output path (default stdout; scan defaults to scan.*)");
    app.add_option("--format", format_name, "Scan output format")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* cx_cmd = app.add_subcommand("cx", "Exact-constant report for a module vector");
    std::string cx_input;
    cx_cmd->add_option("input", cx_input, "Module vector JSON file")->required();
    cx_cmd->fallthrough();

    auto* scan_cmd = app.add_subcommand("scan", "Bulk random-instance verification scan");
    cstar::ScanConfig scan_cfg;
    scan_cmd->add_option("--k", scan_cfg.k_list, "Matrix dimensions to scan");
    scan_cmd->add_option("--n", scan_cfg.n_list, "Tuple lengths to scan");
    scan_cmd->add_option("--trials", scan_cfg.trials, "Trials per (k, n) point");
    scan_cmd->add_option("--workers", scan_cfg.workers, "Worker threads");
    scan_cmd->add_flag("--search", scan_cfg.with_search, "Run the modulus search per row");
    scan_cmd->add_option("--restarts", scan_cfg.search.restarts, "Search restarts per row");
    scan_cmd->add_option("--iters", scan_cfg.search.max_iters, "Search iterations per restart");
    scan_cmd->fallthrough();

    auto* search_cmd = app.add_subcommand("search", "Minimize distance to constant modulus");
    std::string search_input;
    cstar::SearchConfig search_cfg;
    bool no_witness = false;
    search_cmd->add_option("input", search_input, "Module vector JSON file")->required();
    search_cmd->add_option("--restarts", search_cfg.restarts, "Restart count");
    search_cmd->add_option("--iters", search_cfg.max_iters, "Iterations per restart");
    search_cmd->add_flag("--no-witness", no_witness, "Skip the analytic witness seed");
    search_cmd->fallthrough();

    auto* l2_cmd = app.add_subcommand("l2", "Finite-measure function and subspace reports");
    std::string l2_input;
    int l2_trials = 200;
    l2_cmd->add_option("input", l2_input, "JSON file with weights, values and/or basis")
        ->required();
    l2_cmd->add_option("--trials", l2_trials, "Subspace identity trials")
        ->check(CLI::PositiveNumber);
    l2_cmd->fallthrough();

    auto* group_cmd = app.add_subcommand("group", "Group-mean identity report");
    std::string group_input;
    group_cmd->add_option("input", group_input, "Group function JSON file")->required();
    group_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const cstar::ToleranceConfig tol =
        tol_opt->count() > 0 ? cstar::ToleranceConfig::scaled(tol_eq) : cstar::ToleranceConfig{};

    try {
        tol.validate();
        if (*cx_cmd) return run_cx(cx_input, tol, out_path);
        if (*scan_cmd) {
            scan_cfg.seed = seed;
            scan_cfg.tol = tol;
            scan_cfg.search.seed = seed;
            scan_cfg.validate();
            return run_scan(scan_cfg, out_path,
                            format_name == "csv" ? cstar::ScanFormat::csv
                                                 : cstar::ScanFormat::json);
        }
        if (*search_cmd) {
            search_cfg.seed = seed;
            search_cfg.use_witness = !no_witness;
            search_cfg.validate();
            return run_search(search_input, search_cfg, tol, out_path);
        }
        if (*l2_cmd) return run_l2(l2_input, l2_trials, seed, tol, out_path);
        if (*group_cmd) return run_group(group_input, tol, out_path);
    } catch (const cstar::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const cstar::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const cstar::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const cstar::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
