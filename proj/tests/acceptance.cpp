// Acceptance gate: runs the ten release criteria end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
// Oracles are independent of the library's eigensolver: hand scalar
// arithmetic, power iteration, and brute-force phase grids (oracles.hpp).

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cstar/continuous_l2.hpp"
#include "cstar/exact_constant.hpp"
#include "cstar/group_integral.hpp"
#include "cstar/module_space.hpp"
#include "cstar/modulus_search.hpp"
#include "cstar/rng.hpp"
#include "cstar/scan.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;

using cstar::CMatrix;
using cstar::Complex;
using cstar::ModuleVector;
using cstar::Rng;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

ModuleVector diagonal_tuple(int k, int n, Rng& rng) {
    std::vector<CMatrix> entries;
    entries.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<Complex> d(static_cast<size_t>(k));
        for (Complex& z : d) z = rng.cgaussian();
        entries.push_back(CMatrix::diagonal(d));
    }
    return ModuleVector(std::move(entries));
}

// 1. The operator inequality ell1_side <= ell2_side holds on a 25-point grid
//    of 10,000 random tuples, with the whole sweep under the time budget.
void criterion_inequality() {
    const auto start = std::chrono::steady_clock::now();
    const int k_list[] = {1, 2, 3, 4, 8};
    const int n_list[] = {1, 2, 3, 5, 16};
    const int trials = 400;  // 25 grid points x 400 = 10,000 instances

    long checked = 0;
    double worst = 0.0;  // most negative scaled margin
    for (int k : k_list) {
        for (int n : n_list) {
            for (int t = 0; t < trials; ++t) {
                Rng rng(cstar::derive_stream(101, static_cast<std::uint64_t>(k),
                                             static_cast<std::uint64_t>(n),
                                             static_cast<std::uint64_t>(t)));
                const ModuleVector x = cstar::random_module_vector(k, n, rng);
                const CMatrix gap = cstar::ell2_side(x) - cstar::ell1_side(x);
                const double margin = cstar::loewner_margin(CMatrix(k, k), gap);
                const double scaled = margin / (1.0 + cstar::frobenius_norm(gap));
                worst = std::min(worst, scaled);
                ++checked;
            }
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = checked == 10000 && worst >= -1e-9 && elapsed < 120.0;
    report("inequality margin on 10000 random tuples", pass,
           "worst scaled margin " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

// 2. The defining identity of the exact constant holds, and its two formulas
//    agree, on 10,000 invertible-Gram instances.
void criterion_identity() {
    const int k_list[] = {1, 2, 3, 4};
    const int n_list[] = {1, 2, 3, 5, 8};
    const int trials = 500;  // 20 grid points x 500 = 10,000 instances

    long checked = 0;
    long redraws = 0;
    double worst = 0.0;  // max residual relative to the instance scale
    for (int k : k_list) {
        for (int n : n_list) {
            for (int t = 0; t < trials; ++t) {
                for (std::uint64_t attempt = 0;; ++attempt) {
                    Rng rng(cstar::derive_stream(202, static_cast<std::uint64_t>(k),
                                                 static_cast<std::uint64_t>(n),
                                                 static_cast<std::uint64_t>(t) + 100000 * attempt));
                    const ModuleVector x = cstar::random_module_vector(k, n, rng);
                    try {
                        const cstar::ConstantReport r = cstar::verify_exact_constant_identity(x);
                        const double gram_norm =
                            cstar::frobenius_norm(cstar::inner_product(x, x));
                        const double scale =
                            1.0 + 2.0 * std::sqrt(static_cast<double>(n) * k) * gram_norm;
                        worst = std::max(worst, r.residual_identity / scale);
                        worst = std::max(worst, r.residual_defs_match / scale);
                        ++checked;
                        break;
                    } catch (const cstar::NotInvertible&) {
                        ++redraws;  // singular Gram: draw a fresh instance
                    }
                }
            }
        }
    }
    const bool pass = checked == 10000 && worst <= 1e-8;
    report("exact-constant identity on 10000 invertible tuples", pass,
           "max scaled residual " + fmt(worst) + ", redraws " + std::to_string(redraws));
}

// 3. For k = 1 the constant and the distance sqrt(c_x) match hand scalar
//    arithmetic, including the worked instance x = (1, 0).
void criterion_scalar_oracle() {
    // n >= 2: single-entry scalar vectors sit exactly on the constant-modulus
    // set, where sqrt(c_x) is a square root of roundoff and no evaluation can
    // pin the distance to 1e-10. Generic n >= 2 vectors keep c_x well away
    // from zero, making the comparison sharp.
    double worst = 0.0;
    for (int t = 0; t < 10000; ++t) {
        Rng rng(cstar::derive_stream(303, static_cast<std::uint64_t>(t), 0, 0));
        const int n = 2 + t % 7;
        std::vector<Complex> values(static_cast<size_t>(n));
        std::vector<CMatrix> entries;
        for (Complex& z : values) {
            z = rng.cgaussian();
            entries.push_back(CMatrix(1, 1, {z}));
        }
        const cstar::ConstantReport r =
            cstar::verify_exact_constant_identity(ModuleVector(std::move(entries)));
        worst = std::max(worst, std::abs(r.cx_norm - oracles::scalar_cx(values)));
        worst = std::max(worst,
                         std::abs(r.upper_bound_sqrt_cx_norm - oracles::scalar_distance(values)));
    }

    const ModuleVector worked(
        {CMatrix(1, 1, {Complex(1, 0)}), CMatrix(1, 1, {Complex(0, 0)})});
    const cstar::ConstantReport w = cstar::verify_exact_constant_identity(worked);
    const double c_err = std::abs(w.cx_norm - (2.0 - std::sqrt(2.0)));
    const double d_err =
        std::abs(w.upper_bound_sqrt_cx_norm - std::sqrt(2.0 - std::sqrt(2.0)));

    const bool pass = worst <= 1e-10 && c_err <= 1e-12 && d_err <= 1e-12;
    report("scalar closed forms on 10000 vectors and the worked instance", pass,
           "max oracle gap " + fmt(worst) + ", worked errors " + fmt(c_err) + "/" + fmt(d_err));
}

// 4. The modulus search never beats the analytic bound, and the witness
//    evaluates to its closed form, on 1,000 instances with k <= 3, n <= 4.
void criterion_search_soundness() {
    cstar::SearchConfig cfg;
    cfg.restarts = 2;
    cfg.max_iters = 60;

    long checked = 0;
    double worst_over = 0.0;   // best_distance above the bound
    double worst_wit = 0.0;    // witness distance away from the bound
    for (int t = 0; t < 1000; ++t) {
        const int k = 1 + t % 3;
        const int n = 2 + (t / 3) % 3;  // n >= 2: see the scalar criterion note
        for (std::uint64_t attempt = 0;; ++attempt) {
            Rng rng(cstar::derive_stream(404, static_cast<std::uint64_t>(t), attempt, 0));
            const ModuleVector x = cstar::random_module_vector(k, n, rng);
            try {
                const cstar::DistanceBound b = cstar::constant_modulus_distance_bound(x);
                cfg.seed = cstar::derive_stream(405, static_cast<std::uint64_t>(t), 0, 0);
                const cstar::SearchResult r = cstar::search_min_distance(x, cfg);
                worst_over = std::max(worst_over, r.best_distance - b.bound);
                worst_wit = std::max(worst_wit, std::abs(b.witness_distance - b.bound));
                ++checked;
                break;
            } catch (const cstar::NotInvertible&) {
                // a_i a_i^* singular: the witness is undefined, draw again
            }
        }
    }
    const bool pass = checked == 1000 && worst_over <= 1e-8 && worst_wit <= 1e-8;
    report("search soundness and witness exactness on 1000 tuples", pass,
           "max bound excess " + fmt(worst_over) + ", max witness gap " + fmt(worst_wit));
}

// 5. Diagonal tuples: the commuting factorization holds and each diagonal
//    slot agrees with the scalar (k = 1) pipeline and the hand oracle.
void criterion_commuting_diagonal() {
    long checked = 0;
    double worst_fact = 0.0;
    double worst_slot = 0.0;
    for (int t = 0; t < 300; ++t) {
        const int k = 1 + t % 4;
        const int n = 1 + (t / 4) % 6;
        for (std::uint64_t attempt = 0;; ++attempt) {
            Rng rng(cstar::derive_stream(505, static_cast<std::uint64_t>(t), attempt, 0));
            const ModuleVector x = diagonal_tuple(k, n, rng);
            try {
                const cstar::ConstantReport r = cstar::verify_commuting_factorization(x);
                worst_fact = std::max(worst_fact, r.residual_factorization.value_or(0.0));

                const CMatrix cx = r.cx;
                for (int d = 0; d < k; ++d) {
                    std::vector<Complex> slot(static_cast<size_t>(n));
                    std::vector<CMatrix> entries;
                    for (int i = 0; i < n; ++i) {
                        slot[static_cast<size_t>(i)] = x[i](d, d);
                        entries.push_back(CMatrix(1, 1, {x[i](d, d)}));
                    }
                    const CMatrix scalar_cx =
                        cstar::exact_constant_symmetrized(ModuleVector(std::move(entries)));
                    worst_slot =
                        std::max(worst_slot, std::abs(cx(d, d) - scalar_cx(0, 0)));
                    worst_slot = std::max(
                        worst_slot, std::abs(cx(d, d).real() - oracles::scalar_cx(slot)));
                }
                ++checked;
                break;
            } catch (const cstar::NotInvertible&) {
                // a slot vanished entirely: draw a fresh diagonal tuple
            }
        }
    }
    const bool pass = checked == 300 && worst_fact <= 1e-8 && worst_slot <= 1e-8;
    report("commuting diagonal case matches the scalar pipeline", pass,
           "max factorization residual " + fmt(worst_fact) + ", max slot gap " +
               fmt(worst_slot));
}

// 6. The group-mean identity <f-1, f-1> = 2 - 2 mean(f) holds on 1,000
//    normalized diagonal-valued instances, plus the scalar worked case.
void criterion_group_mean() {
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        Rng rng(cstar::derive_stream(606, static_cast<std::uint64_t>(t), 0, 0));
        const int order = 1 + t % 64;
        const int k = 1 + t % 3;

        // Per-slot positive values scaled to mean square one over the group.
        std::vector<std::vector<double>> slots(
            static_cast<size_t>(k), std::vector<double>(static_cast<size_t>(order)));
        for (int d = 0; d < k; ++d) {
            double mean_sq = 0.0;
            for (int x = 0; x < order; ++x) {
                const double v = std::abs(rng.gaussian()) + 0.1;
                slots[static_cast<size_t>(d)][static_cast<size_t>(x)] = v;
                mean_sq += v * v;
            }
            const double scale = 1.0 / std::sqrt(mean_sq / order);
            for (int x = 0; x < order; ++x)
                slots[static_cast<size_t>(d)][static_cast<size_t>(x)] *= scale;
        }
        std::vector<CMatrix> values;
        for (int x = 0; x < order; ++x) {
            std::vector<Complex> diag(static_cast<size_t>(k));
            for (int d = 0; d < k; ++d)
                diag[static_cast<size_t>(d)] =
                    Complex(slots[static_cast<size_t>(d)][static_cast<size_t>(x)], 0);
            values.push_back(CMatrix::diagonal(diag));
        }
        const cstar::GroupFunction f(cstar::FiniteGroupSpace{order}, std::move(values));
        worst = std::max(worst, cstar::verify_group_mean_identity(f).residual);
    }

    const cstar::GroupFunction worked(
        cstar::FiniteGroupSpace{2},
        {CMatrix(1, 1, {Complex(std::sqrt(2.0), 0)}), CMatrix(1, 1)});
    const double c_err =
        std::abs(cstar::verify_group_mean_identity(worked).c_norm - (2.0 - std::sqrt(2.0)));

    const bool pass = worst <= 1e-9 && c_err <= 1e-12;
    report("group mean identity on 1000 normalized instances", pass,
           "max residual " + fmt(worst) + ", worked error " + fmt(c_err));
}

// 7. Weighted functions: the norm identity, the integral form, and the
//    closed-form distance agree on 10,000 random functions, and the distance
//    matches a brute phase grid on small spaces.
void criterion_l2_agreement() {
    // m >= 2: on one atom every function is constant modulus, so the distance
    // identity degenerates to sqrt-of-roundoff there (see the scalar note).
    double worst = 0.0;
    for (int t = 0; t < 10000; ++t) {
        Rng rng(cstar::derive_stream(707, static_cast<std::uint64_t>(t), 0, 0));
        const int m = 2 + t % 255;
        std::vector<double> w(static_cast<size_t>(m));
        for (double& wj : w) wj = 2.0 * rng.uniform01();  // in (0, 2]
        const auto sp = std::make_shared<const cstar::FiniteMeasureSpace>(std::move(w));
        std::vector<Complex> values(static_cast<size_t>(m));
        for (Complex& z : values) z = rng.cgaussian();
        const cstar::L2ConstantReport r =
            cstar::verify_l2_exact_constant(cstar::L2Function(sp, std::move(values)));
        worst = std::max(worst, std::abs(r.cf - r.cf_closed_form));
        worst = std::max(worst, r.norm_identity_residual);
        worst = std::max(worst, r.distance_identity_residual);
    }

    double worst_grid = 0.0;
    for (int t = 0; t < 200; ++t) {
        Rng rng(cstar::derive_stream(708, static_cast<std::uint64_t>(t), 0, 0));
        const int m = 1 + t % 3;
        std::vector<double> w(static_cast<size_t>(m));
        for (double& wj : w) wj = 0.2 + rng.uniform01();
        const auto sp = std::make_shared<const cstar::FiniteMeasureSpace>(w);
        std::vector<Complex> values(static_cast<size_t>(m));
        for (Complex& z : values) z = rng.cgaussian();
        cstar::L2Function f(sp, std::move(values));
        const double two = cstar::l2_norms(f).two_norm;
        for (Complex& z : f.values) z /= two;
        // 65536 phases per atom: grid resolution ~5e-5 in the worst case.
        worst_grid = std::max(worst_grid,
                              std::abs(cstar::distance_to_constant_modulus(f) -
                                       oracles::brute_phase_distance(f.values, w, 65536)));
    }

    const bool pass = worst <= 1e-9 && worst_grid <= 1e-4;
    report("weighted-function constants on 10000 functions", pass,
           "max residual " + fmt(worst) + ", max grid gap " + fmt(worst_grid));
}

// 8. The normalized projection beats 1,000 Monte Carlo unit vectors of the
//    subspace in every trial, and satisfies its distance identity.
void criterion_closest_unit() {
    long trials_won = 0;
    double worst_identity = 0.0;
    const int total = 1000;
    for (int t = 0; t < total; ++t) {
        Rng rng(cstar::derive_stream(808, static_cast<std::uint64_t>(t), 0, 0));
        const int m = 4 + t % 13;  // 4..16 atoms
        std::vector<double> w(static_cast<size_t>(m));
        for (double& wj : w) wj = 0.1 + rng.uniform01();
        const auto sp = std::make_shared<const cstar::FiniteMeasureSpace>(std::move(w));

        const int dim = 1 + t % (m / 2);
        std::vector<cstar::L2Function> raw;
        for (int b = 0; b < dim; ++b) {
            std::vector<Complex> v(static_cast<size_t>(m));
            for (Complex& z : v) z = rng.cgaussian();
            raw.emplace_back(sp, std::move(v));
        }
        const cstar::SubspaceProjector P = cstar::SubspaceProjector::orthonormalize(sp, raw);

        std::vector<Complex> hv(static_cast<size_t>(m));
        for (Complex& z : hv) z = rng.cgaussian();
        cstar::L2Function h(sp, std::move(hv));
        const double two = cstar::l2_norms(h).two_norm;
        for (Complex& z : h.values) z /= two;

        const cstar::L2Function best = cstar::closest_unit_in_subspace(h, P);
        double opt = 0.0;
        for (int j = 0; j < m; ++j)
            opt += sp->weight(j) * std::norm(h.values[static_cast<size_t>(j)] -
                                             best.values[static_cast<size_t>(j)]);
        const double pnorm = cstar::l2_norms(P.project(h)).two_norm;
        worst_identity = std::max(worst_identity, std::abs(opt - (2.0 - 2.0 * pnorm)));

        bool won = true;
        for (int cand = 0; cand < 1000; ++cand) {
            const cstar::L2Function u = cstar::random_unit_in_subspace(P, rng);
            double d = 0.0;
            for (int j = 0; j < m; ++j)
                d += sp->weight(j) * std::norm(h.values[static_cast<size_t>(j)] -
                                               u.values[static_cast<size_t>(j)]);
            if (d < opt - 1e-9) {
                won = false;
                break;
            }
        }
        if (won) ++trials_won;
    }
    const bool pass = trials_won == total && worst_identity <= 1e-10;
    report("closest unit vector beats Monte Carlo in every trial", pass,
           std::to_string(trials_won) + "/" + std::to_string(total) +
               " won, max identity residual " + fmt(worst_identity));
}

// 9. Both subspace identities hold on 1,000 random subspaces of dimension at
//    most m/2 over spaces of at most 32 atoms.
void criterion_subspace_identities() {
    double worst = 0.0;
    long skipped = 0;
    for (int t = 0; t < 1000; ++t) {
        Rng rng(cstar::derive_stream(909, static_cast<std::uint64_t>(t), 0, 0));
        const int m = 2 + t % 31;  // 2..32 atoms
        std::vector<double> w(static_cast<size_t>(m));
        for (double& wj : w) wj = 0.1 + rng.uniform01();
        const auto sp = std::make_shared<const cstar::FiniteMeasureSpace>(std::move(w));

        const int dim = 1 + t % std::max(1, m / 2);
        std::vector<cstar::L2Function> raw;
        for (int b = 0; b < dim; ++b) {
            std::vector<Complex> v(static_cast<size_t>(m));
            for (Complex& z : v) z = rng.cgaussian();
            raw.emplace_back(sp, std::move(v));
        }
        const cstar::SubspaceProjector P = cstar::SubspaceProjector::orthonormalize(sp, raw);
        const cstar::SubspaceIdentityReport r = cstar::verify_subspace_identities(
            P, 10, cstar::derive_stream(910, static_cast<std::uint64_t>(t), 0, 0));
        worst = std::max(worst, r.max_residual_unit_distance);
        worst = std::max(worst, r.max_residual_projection);
        skipped += r.skipped;
    }
    const bool pass = worst <= 1e-9;
    report("subspace identities on 1000 random subspaces", pass,
           "max residual " + fmt(worst) + ", skipped projections " + std::to_string(skipped));
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 10. The scan command writes byte-identical output across repeated runs and
//     across 1-vs-8 worker configurations.
void criterion_scan_determinism() {
    const fs::path dir = fs::temp_directory_path() / "cstar-acceptance";
    fs::create_directories(dir);

    const auto run = [&dir](const std::string& name, int workers) -> int {
        const fs::path out = dir / name;
        const std::string cmd = std::string(CSTAR_CLI_BIN) +
                                " --seed 11 --format csv scan --k 2 3 --n 2 4 --trials 10" +
                                " --workers " + std::to_string(workers) + " --out '" +
                                out.string() + "' > '" + (dir / (name + ".log")).string() +
                                "' 2>&1";
        const int rc = std::system(cmd.c_str());
        return (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    };

    const int rc_a = run("a.csv", 1);
    const int rc_b = run("b.csv", 1);
    const int rc_c = run("c.csv", 8);
    const std::string a = slurp(dir / "a.csv");
    const bool pass = rc_a == 0 && rc_b == 0 && rc_c == 0 && !a.empty() &&
                      a == slurp(dir / "b.csv") && a == slurp(dir / "c.csv");
    report("scan output is byte-identical across runs and worker counts", pass,
           "exit codes " + std::to_string(rc_a) + "/" + std::to_string(rc_b) + "/" +
               std::to_string(rc_c) + ", " + std::to_string(a.size()) + " bytes");
}

}  // namespace

int main() {
    criterion_inequality();
    criterion_identity();
    criterion_scalar_oracle();
    criterion_search_soundness();
    criterion_commuting_diagonal();
    criterion_group_mean();
    criterion_l2_agreement();
    criterion_closest_unit();
    criterion_subspace_identities();
    criterion_scan_determinism();

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
