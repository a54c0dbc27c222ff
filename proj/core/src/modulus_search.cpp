#include "cstar/modulus_search.hpp"

#include <cmath>
#include <string>

#include "cstar/exact_constant.hpp"
#include "cstar/rng.hpp"

namespace cstar {

void SearchConfig::validate() const {
    if (restarts < 1) throw ConfigError("SearchConfig: restarts must be >= 1");
    if (max_iters < 1) throw ConfigError("SearchConfig: max_iters must be >= 1");
    if (!(step_init > 0)) throw ConfigError("SearchConfig: step_init must be positive");
    if (!(step_shrink > 0 && step_shrink < 1)) {
        throw ConfigError("SearchConfig: step_shrink must lie in (0, 1)");
    }
    if (!(conv_tol > 0)) throw ConfigError("SearchConfig: conv_tol must be positive");
}

double distance_to(const ModuleVector& y_target, const std::vector<CMatrix>& unitaries,
                   const ToleranceConfig& tol) {
    if (static_cast<int>(unitaries.size()) != y_target.n()) {
        throw DimensionMismatch("distance_to: tuple length mismatch");
    }
    const CMatrix eye = CMatrix::identity(y_target.k());
    std::vector<CMatrix> scaled;
    scaled.reserve(unitaries.size());
    const double inv_root_n = 1.0 / std::sqrt(static_cast<double>(y_target.n()));
    for (const CMatrix& u : unitaries) {
        require_same_shape(u, eye, "distance_to");
        if (frobenius_norm(u * adjoint(u) - eye) > tol.eq_tol) {
            throw NotUnitary("distance_to: tuple entry is not unitary");
        }
        scaled.push_back(inv_root_n * u);
    }
    return module_norm(y_target - ModuleVector(std::move(scaled)));
}

namespace {

// exp(K) for anti-Hermitian K, through the spectrum of the Hermitian iK.
CMatrix unitary_exp_skew(const CMatrix& skew, const ToleranceConfig& tol) {
    const HermElement h = herm_eig(Complex(0.0, 1.0) * skew, tol);
    return matrix_fn(h, [](double lam) {
        return Complex(std::cos(lam), -std::sin(lam));  // e^{-i lam}
    });
}

// Random anti-Hermitian direction of unit Frobenius norm.
CMatrix random_skew_direction(int k, Rng& rng) {
    CMatrix b = ginibre(k, rng);
    CMatrix skew = 0.5 * (b - adjoint(b));
    const double norm = frobenius_norm(skew);
    if (norm < 1e-12) {
        skew = CMatrix(k, k);
        skew(0, 0) = Complex(0.0, 1.0);
        return skew;
    }
    return (1.0 / norm) * skew;
}

// Plain distance without the unitarity gate; iterates are re-unitarized on
// every update, so the gate would only re-measure their polar residual.
double objective(const ModuleVector& y_target, const std::vector<CMatrix>& unitaries) {
    const double inv_root_n = 1.0 / std::sqrt(static_cast<double>(y_target.n()));
    std::vector<CMatrix> scaled;
    scaled.reserve(unitaries.size());
    for (const CMatrix& u : unitaries) scaled.push_back(inv_root_n * u);
    return module_norm(y_target - ModuleVector(std::move(scaled)));
}

struct RestartOutcome {
    double distance = 0.0;
    std::vector<CMatrix> unitaries;
    long iterations = 0;
};

RestartOutcome run_restart(const ModuleVector& y_target, std::vector<CMatrix> unitaries,
                           const SearchConfig& cfg, const ToleranceConfig& tol, Rng& rng) {
    RestartOutcome out;
    out.unitaries = std::move(unitaries);
    out.distance = objective(y_target, out.unitaries);

    // One step size per coordinate: a coordinate the objective is flat in
    // (or one that has converged) exhausts only its own budget and drops out
    // of the polling set, instead of starving the coordinates still moving.
    const int n = y_target.n();
    std::vector<double> steps(static_cast<size_t>(n), cfg.step_init);
    std::vector<int> active(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) active[static_cast<size_t>(i)] = i;

    for (int iter = 0; iter < cfg.max_iters && !active.empty(); ++iter) {
        ++out.iterations;
        const int pick = active.size() == 1
                             ? 0
                             : rng.uniform_int(static_cast<int>(active.size()));
        const int coord = active[static_cast<size_t>(pick)];
        const CMatrix direction = random_skew_direction(y_target.k(), rng);
        const CMatrix move =
            unitary_exp_skew(steps[static_cast<size_t>(coord)] * direction, tol);

        // Poll both signs of the direction before charging a failure; exp of
        // the negated skew is its adjoint, so one spectral call covers both.
        const CMatrix saved = out.unitaries[static_cast<size_t>(coord)];
        bool improved = false;
        for (const CMatrix& factor : {move, adjoint(move)}) {
            out.unitaries[static_cast<size_t>(coord)] = polar_unitary(saved * factor, tol);
            const double candidate = objective(y_target, out.unitaries);
            if (candidate < out.distance) {
                out.distance = candidate;
                improved = true;
                break;
            }
        }
        if (!improved) {
            out.unitaries[static_cast<size_t>(coord)] = saved;
            steps[static_cast<size_t>(coord)] *= cfg.step_shrink;
            if (steps[static_cast<size_t>(coord)] < cfg.conv_tol) {
                active.erase(active.begin() + pick);
            }
        }
    }
    return out;
}

}  // namespace

SearchResult search_min_distance(const ModuleVector& x, const SearchConfig& cfg,
                                 const ToleranceConfig& tol) {
    cfg.validate();

    const ModuleVector y_target = normalized_vector(x, tol);
    const double sqrt_cx_norm =
        std::sqrt(std::max(norm_cstar(exact_constant_symmetrized(x, tol)), 0.0));

    std::vector<CMatrix> witness;
    if (cfg.use_witness) {
        const ModuleVector w = constant_modulus_witness(x, tol);  // throws on singular a_i a_i^*
        const double root_n = std::sqrt(static_cast<double>(x.n()));
        for (int i = 0; i < w.n(); ++i) witness.push_back(root_n * w[i]);
    }

    SearchResult best;
    bool have_best = false;
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        Rng rng(cfg.seed ^ static_cast<std::uint64_t>(restart));
        std::vector<CMatrix> init;
        if (restart == 0 && cfg.use_witness) {
            init = witness;
        } else {
            init.reserve(static_cast<size_t>(x.n()));
            for (int i = 0; i < x.n(); ++i) init.push_back(haar_unitary(x.k(), rng));
        }
        RestartOutcome outcome = run_restart(y_target, std::move(init), cfg, tol, rng);
        best.iterations_used += outcome.iterations;
        if (!have_best || outcome.distance < best.best_distance) {
            have_best = true;
            best.best_distance = outcome.distance;
            const double inv_root_n = 1.0 / std::sqrt(static_cast<double>(x.n()));
            std::vector<CMatrix> point;
            point.reserve(outcome.unitaries.size());
            for (const CMatrix& u : outcome.unitaries) point.push_back(inv_root_n * u);
            best.best_point = ModuleVector(std::move(point));
            ++best.restarts_improved;
        }
    }
    best.gap_to_sqrt_cx_norm = sqrt_cx_norm - best.best_distance;
    return best;
}

}  // namespace cstar
