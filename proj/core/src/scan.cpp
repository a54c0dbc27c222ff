#include "cstar/scan.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cstar/exact_constant.hpp"
#include "cstar/rng.hpp"
#include "cstar/serialization.hpp"

namespace cstar {

void ScanConfig::validate() const {
    if (k_list.empty() || n_list.empty()) {
        throw ConfigError("ScanConfig: k_list and n_list must be nonempty");
    }
    for (int k : k_list)
        if (k < 1) throw ConfigError("ScanConfig: k values must be >= 1");
    for (int n : n_list)
        if (n < 1) throw ConfigError("ScanConfig: n values must be >= 1");
    if (trials < 1) throw ConfigError("ScanConfig: trials must be >= 1");
    if (workers < 1) throw ConfigError("ScanConfig: workers must be >= 1");
    tol.validate();
    if (with_search) search.validate();
}

const char* to_string(ScanStatus s) {
    switch (s) {
        case ScanStatus::ok: return "ok";
        case ScanStatus::skipped_singular: return "skipped_singular";
        case ScanStatus::tolerance_violation: return "tolerance_violation";
    }
    return "unknown";
}

ScanRow scan_one(int k, int n, int trial, const ScanConfig& cfg) {
    ScanRow row;
    row.k = k;
    row.n = n;
    row.trial = trial;
    row.seed_used = derive_stream(cfg.seed, static_cast<std::uint64_t>(k),
                                  static_cast<std::uint64_t>(n),
                                  static_cast<std::uint64_t>(trial));
    Rng rng(row.seed_used);
    const ModuleVector x = random_module_vector(k, n, rng);

    const CMatrix gap = ell2_side(x, cfg.tol) - ell1_side(x, cfg.tol);
    const double margin = loewner_margin(CMatrix(k, k), gap, cfg.tol);
    row.ineq_margin = margin;
    if (margin < -cfg.tol.psd_tol * (1.0 + frobenius_norm(gap))) {
        row.status = ScanStatus::tolerance_violation;
    }

    const GramData gram = make_gram(x, cfg.tol);
    if (!gram.invertible) {
        row.status = ScanStatus::skipped_singular;
        return row;
    }

    try {
        const ConstantReport report = verify_exact_constant_identity(x, cfg.tol);
        row.cx_norm = report.cx_norm;
        row.residual_identity = report.residual_identity;
        row.residual_defs_match = report.residual_defs_match;
        row.bound_sqrt_cx_norm = std::sqrt(std::max(report.cx_norm, 0.0));

        const double scale =
            1.0 + 2.0 * std::sqrt(static_cast<double>(n) * k) * frobenius_norm(gram.gram.base);
        if (report.residual_identity > cfg.tol.eq_tol * scale ||
            report.residual_defs_match > cfg.tol.eq_tol * scale) {
            row.status = ScanStatus::tolerance_violation;
        }

        if (cfg.with_search) {
            SearchConfig search_cfg = cfg.search;
            search_cfg.seed = derive_stream(row.seed_used, 1, 1, 1);
            const SearchResult result = search_min_distance(x, search_cfg, cfg.tol);
            row.search_distance = result.best_distance;
            if (result.best_distance > *row.bound_sqrt_cx_norm + cfg.tol.eq_tol) {
                row.status = ScanStatus::tolerance_violation;
            }
        }
    } catch (const NotInvertible&) {
        row.status = ScanStatus::skipped_singular;
    }
    return row;
}

std::vector<ScanRow> run_scan(const ScanConfig& cfg) {
    cfg.validate();

    struct Cell {
        int k, n, trial;
    };
    std::vector<Cell> cells;
    cells.reserve(cfg.k_list.size() * cfg.n_list.size() * static_cast<size_t>(cfg.trials));
    for (int k : cfg.k_list)
        for (int n : cfg.n_list)
            for (int t = 0; t < cfg.trials; ++t) cells.push_back({k, n, t});

    std::vector<ScanRow> rows(cells.size());
    const int workers = std::min<int>(cfg.workers, static_cast<int>(cells.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < cells.size(); ++i) {
            rows[i] = scan_one(cells[i].k, cells[i].n, cells[i].trial, cfg);
        }
        return rows;
    }

    // Each row depends only on its own derived stream, so assignment of rows
    // to threads cannot change the output.
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                rows[i] = scan_one(cells[i].k, cells[i].n, cells[i].trial, cfg);
            }
        });
    }
    for (std::thread& t : pool) t.join();
    return rows;
}

ScanSummary summarize(const std::vector<ScanRow>& rows) {
    ScanSummary s;
    s.rows = static_cast<long>(rows.size());
    bool have_margin = false;
    for (const ScanRow& row : rows) {
        switch (row.status) {
            case ScanStatus::ok: ++s.ok; break;
            case ScanStatus::skipped_singular: ++s.skipped_singular; break;
            case ScanStatus::tolerance_violation: ++s.tolerance_violation; break;
        }
        if (row.residual_identity) s.max_residual = std::max(s.max_residual, *row.residual_identity);
        if (row.residual_defs_match)
            s.max_residual = std::max(s.max_residual, *row.residual_defs_match);
        if (row.ineq_margin) {
            s.min_ineq_margin = have_margin ? std::min(s.min_ineq_margin, *row.ineq_margin)
                                            : *row.ineq_margin;
            have_margin = true;
        }
    }
    return s;
}

std::string summary_line(const ScanSummary& s) {
    std::ostringstream out;
    out << "rows=" << s.rows << " ok=" << s.ok << " skipped_singular=" << s.skipped_singular
        << " tolerance_violation=" << s.tolerance_violation
        << " max_residual=" << format_double(s.max_residual)
        << " min_ineq_margin=" << format_double(s.min_ineq_margin);
    return out.str();
}

namespace {

void append_cell(std::string& out, const std::optional<double>& v) {
    out.push_back(',');
    if (v) out += format_double(*v);
}

}  // namespace

std::string rows_to_csv(const std::vector<ScanRow>& rows) {
    std::string out =
        "k,n,trial,seed_used,cx_norm,residual_identity,residual_defs_match,"
        "ineq_margin,search_distance,bound_sqrt_cx_norm,status\n";
    for (const ScanRow& row : rows) {
        out += std::to_string(row.k);
        out.push_back(',');
        out += std::to_string(row.n);
        out.push_back(',');
        out += std::to_string(row.trial);
        out.push_back(',');
        out += std::to_string(row.seed_used);
        append_cell(out, row.cx_norm);
        append_cell(out, row.residual_identity);
        append_cell(out, row.residual_defs_match);
        append_cell(out, row.ineq_margin);
        append_cell(out, row.search_distance);
        append_cell(out, row.bound_sqrt_cx_norm);
        out.push_back(',');
        out += to_string(row.status);
        out.push_back('\n');
    }
    return out;
}

std::string rows_to_json(const std::vector<ScanRow>& rows) {
    using nlohmann::json;
    json arr = json::array();
    for (const ScanRow& row : rows) {
        json j{{"k", row.k},
               {"n", row.n},
               {"trial", row.trial},
               {"seed_used", row.seed_used},
               {"status", to_string(row.status)}};
        const auto put = [&j](const char* key, const std::optional<double>& v) {
            j[key] = v ? json(*v) : json(nullptr);
        };
        put("cx_norm", row.cx_norm);
        put("residual_identity", row.residual_identity);
        put("residual_defs_match", row.residual_defs_match);
        put("ineq_margin", row.ineq_margin);
        put("search_distance", row.search_distance);
        put("bound_sqrt_cx_norm", row.bound_sqrt_cx_norm);
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

}  // namespace cstar
