#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cstar/modulus_search.hpp"
#include "cstar/tolerance.hpp"

namespace cstar {

enum class ScanFormat { json, csv };

struct ScanConfig {
    std::vector<int> k_list{1, 2, 3, 4, 8};
    std::vector<int> n_list{1, 2, 3, 5, 16};
    int trials = 100;          // per (k, n) grid point
    std::uint64_t seed = 0;
    ToleranceConfig tol;
    std::string output_path;
    ScanFormat format = ScanFormat::json;
    int workers = 1;
    bool with_search = false;  // also run the modulus search per row
    SearchConfig search;

    void validate() const;
};

enum class ScanStatus { ok, skipped_singular, tolerance_violation };

const char* to_string(ScanStatus s);

// One row per (k, n, trial). The per-row stream is derived from
// (seed, k, n, trial), so every row is reproducible in isolation and the
// output is independent of the worker count.
struct ScanRow {
    int k = 0;
    int n = 0;
    int trial = 0;
    std::uint64_t seed_used = 0;
    std::optional<double> cx_norm;
    std::optional<double> residual_identity;
    std::optional<double> residual_defs_match;
    std::optional<double> ineq_margin;  // lambda_min(ell2_side - ell1_side)
    std::optional<double> search_distance;
    std::optional<double> bound_sqrt_cx_norm;
    ScanStatus status = ScanStatus::ok;
};

struct ScanSummary {
    long rows = 0;
    long ok = 0;
    long skipped_singular = 0;
    long tolerance_violation = 0;
    double max_residual = 0.0;
    double min_ineq_margin = 0.0;
};

ScanRow scan_one(int k, int n, int trial, const ScanConfig& cfg);

// Rows in (k, n, trial) order. Trials run on cfg.workers threads.
std::vector<ScanRow> run_scan(const ScanConfig& cfg);

ScanSummary summarize(const std::vector<ScanRow>& rows);
std::string summary_line(const ScanSummary& s);

// Header row plus one line per row; optional cells are empty. Doubles are
// rendered in shortest round-trip decimal form, so equal inputs give
// byte-identical files.
std::string rows_to_csv(const std::vector<ScanRow>& rows);
std::string rows_to_json(const std::vector<ScanRow>& rows);

}  // namespace cstar
