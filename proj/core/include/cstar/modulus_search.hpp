#pragma once

#include <cstdint>

#include "cstar/module_space.hpp"

namespace cstar {

struct SearchConfig {
    int restarts = 16;
    int max_iters = 2000;       // per restart
    double step_init = 0.5;     // per-coordinate trust step
    double step_shrink = 0.7;   // geometric shrink when a coordinate's poll fails
    double conv_tol = 1e-9;     // a coordinate retires once its step is this small
    std::uint64_t seed = 0;
    bool use_witness = true;    // seed restart 0 with the analytic witness

    void validate() const;
};

struct SearchResult {
    double best_distance = 0.0;
    ModuleVector best_point;       // constant modulus
    long iterations_used = 0;      // summed over restarts
    int restarts_improved = 0;     // restarts that lowered the incumbent
    double gap_to_sqrt_cx_norm = 0.0;  // sqrt(||c_x||) - best_distance
};

// ||y_target - (1/sqrt(n))(u_1, ..., u_n)||. Each u_i must be unitary within
// eq_tol.
double distance_to(const ModuleVector& y_target, const std::vector<CMatrix>& unitaries,
                   const ToleranceConfig& tol = {});

// Minimizes the module-norm distance from G^{-1/2} x to the constant-modulus
// set by randomized coordinate descent over the n unitaries. Each update is
// multiplicative, u_i <- u_i exp(+-step skew), with re-unitarization via the
// polar factor, so every iterate stays constant modulus; both signs of a
// direction are polled before the coordinate's step shrinks. Restart 0 starts
// at the analytic witness (when use_witness), the rest at Haar-random tuples;
// the per-restart stream is seed XOR restart index. Deterministic given
// (x, cfg).
SearchResult search_min_distance(const ModuleVector& x, const SearchConfig& cfg,
                                 const ToleranceConfig& tol = {});

}  // namespace cstar
