#include "cstar/continuous_l2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cstar/errors.hpp"
#include "cstar/rng.hpp"

namespace cstar {

FiniteMeasureSpace::FiniteMeasureSpace(std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty()) throw DomainError("FiniteMeasureSpace: at least one atom required");
    for (double w : weights_) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw DomainError("FiniteMeasureSpace: weights must be strictly positive and finite");
        }
        total_mass_ += w;
    }
    if (!std::isfinite(total_mass_)) {
        throw DomainError("FiniteMeasureSpace: total mass overflows");
    }
}

L2Function::L2Function(MeasureSpacePtr sp, std::vector<Complex> vals)
    : space(std::move(sp)), values(std::move(vals)) {
    if (!space) throw DomainError("L2Function: null measure space");
    if (static_cast<int>(values.size()) != space->size()) {
        throw DimensionMismatch("L2Function: " + std::to_string(values.size()) +
                                " values on " + std::to_string(space->size()) + " atoms");
    }
    for (const Complex& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw DomainError("L2Function: values must be finite");
        }
    }
}

L2Norms l2_norms(const L2Function& f) {
    double one = 0.0;
    double two_sq = 0.0;
    for (int j = 0; j < f.size(); ++j) {
        const double w = f.space->weight(j);
        const double a = std::abs(f.values[static_cast<size_t>(j)]);
        one += w * a;
        two_sq += w * a * a;
    }
    return {one, std::sqrt(two_sq)};
}

Complex l2_inner(const L2Function& f, const L2Function& g) {
    if (f.size() != g.size()) throw DimensionMismatch("l2_inner: atom counts differ");
    Complex acc(0.0, 0.0);
    for (int j = 0; j < f.size(); ++j) {
        acc += f.space->weight(j) * f.values[static_cast<size_t>(j)] *
               std::conj(g.values[static_cast<size_t>(j)]);
    }
    return acc;
}

double l2_exact_constant(const L2Function& f, const ToleranceConfig& tol) {
    const L2Norms norms = l2_norms(f);
    if (norms.two_norm <= tol.inv_tol) throw ZeroFunction("l2_exact_constant: ||f||_2 is zero");
    const double target = 1.0 / std::sqrt(f.space->total_mass());
    double cf = 0.0;
    for (int j = 0; j < f.size(); ++j) {
        const double dev = std::abs(f.values[static_cast<size_t>(j)]) / norms.two_norm - target;
        cf += f.space->weight(j) * dev * dev;
    }
    return cf;
}

L2ConstantReport verify_l2_exact_constant(const L2Function& f, const ToleranceConfig& tol) {
    const L2Norms norms = l2_norms(f);
    if (norms.two_norm <= tol.inv_tol)
        throw ZeroFunction("verify_l2_exact_constant: ||f||_2 is zero");
    const double root_mu = std::sqrt(f.space->total_mass());

    L2ConstantReport report;
    report.cf = l2_exact_constant(f, tol);
    report.cf_closed_form = 2.0 - 2.0 * norms.one_norm / (root_mu * norms.two_norm);

    // Normalize and evaluate the infimum distance in closed form.
    std::vector<Complex> unit(f.values);
    for (Complex& v : unit) v /= norms.two_norm;
    report.distance = distance_to_constant_modulus(L2Function(f.space, std::move(unit)), tol);

    report.norm_identity_residual =
        std::abs(norms.one_norm - (1.0 - report.cf / 2.0) * root_mu * norms.two_norm);
    report.distance_identity_residual =
        std::abs(report.distance - std::sqrt(std::max(report.cf, 0.0)));
    return report;
}

double distance_to_constant_modulus(const L2Function& f_unit, const ToleranceConfig& tol) {
    const L2Norms norms = l2_norms(f_unit);
    if (std::abs(norms.two_norm - 1.0) > tol.eq_tol) {
        throw NotUnit("distance_to_constant_modulus: ||f||_2 = " +
                      std::to_string(norms.two_norm));
    }
    const double root_mu = std::sqrt(f_unit.space->total_mass());
    return std::sqrt(std::max(2.0 - 2.0 * norms.one_norm / root_mu, 0.0));
}

L2Function nearest_constant_modulus(const L2Function& f) {
    const double target = 1.0 / std::sqrt(f.space->total_mass());
    std::vector<Complex> values;
    values.reserve(f.values.size());
    for (const Complex& v : f.values) {
        const double a = std::abs(v);
        values.push_back(a == 0.0 ? Complex(target, 0.0) : (target / a) * v);
    }
    return L2Function(f.space, std::move(values));
}

bool is_constant_modulus(const L2Function& f, const ToleranceConfig& tol) {
    const double target = 1.0 / std::sqrt(f.space->total_mass());
    for (const Complex& v : f.values) {
        if (std::abs(std::abs(v) - target) > tol.eq_tol) return false;
    }
    return true;
}

SubspaceProjector::SubspaceProjector(MeasureSpacePtr space, std::vector<L2Function> basis,
                                     const ToleranceConfig& tol)
    : space_(std::move(space)), basis_(std::move(basis)) {
    if (!space_) throw DomainError("SubspaceProjector: null measure space");
    if (basis_.empty()) throw DomainError("SubspaceProjector: empty basis");
    for (const L2Function& b : basis_) {
        if (b.size() != space_->size()) {
            throw DimensionMismatch("SubspaceProjector: basis function atom count mismatch");
        }
    }
    for (size_t i = 0; i < basis_.size(); ++i) {
        for (size_t j = i; j < basis_.size(); ++j) {
            const Complex g = l2_inner(basis_[i], basis_[j]);
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(g - expected) > tol.eq_tol) {
                throw DomainError("SubspaceProjector: basis is not orthonormal");
            }
        }
    }
}

SubspaceProjector SubspaceProjector::orthonormalize(MeasureSpacePtr space,
                                                    const std::vector<L2Function>& raw,
                                                    const ToleranceConfig& tol) {
    std::vector<L2Function> basis;
    for (const L2Function& v : raw) {
        L2Function u = v;
        // Two passes of modified Gram-Schmidt keep the Gram defect near
        // machine precision even for ill-conditioned spanning sets.
        for (int pass = 0; pass < 2; ++pass) {
            for (const L2Function& b : basis) {
                const Complex coeff = l2_inner(u, b);
                for (size_t j = 0; j < u.values.size(); ++j) {
                    u.values[j] -= coeff * b.values[j];
                }
            }
        }
        const double norm = l2_norms(u).two_norm;
        if (norm <= 1e-10 * std::max(1.0, l2_norms(v).two_norm)) continue;  // dependent
        for (Complex& val : u.values) val /= norm;
        basis.push_back(std::move(u));
    }
    if (basis.empty()) {
        throw DomainError("SubspaceProjector::orthonormalize: no independent functions");
    }
    return SubspaceProjector(std::move(space), std::move(basis), tol);
}

L2Function SubspaceProjector::project(const L2Function& h) const {
    if (h.size() != space_->size()) {
        throw DimensionMismatch("SubspaceProjector::project: atom count mismatch");
    }
    std::vector<Complex> out(static_cast<size_t>(space_->size()), Complex(0.0, 0.0));
    for (const L2Function& b : basis_) {
        const Complex coeff = l2_inner(h, b);
        for (size_t j = 0; j < out.size(); ++j) out[j] += coeff * b.values[j];
    }
    return L2Function(space_, std::move(out));
}

L2Function closest_unit_in_subspace(const L2Function& h, const SubspaceProjector& P,
                                    const ToleranceConfig& tol) {
    L2Function ph = P.project(h);
    const double norm = l2_norms(ph).two_norm;
    if (norm <= tol.inv_tol) throw ProjectionZero("closest_unit_in_subspace: Ph is zero");
    for (Complex& v : ph.values) v /= norm;
    return ph;
}

namespace {

double distance_sq(const L2Function& f, const L2Function& g) {
    double acc = 0.0;
    for (int j = 0; j < f.size(); ++j) {
        const double w = f.space->weight(j);
        acc += w * std::norm(f.values[static_cast<size_t>(j)] - g.values[static_cast<size_t>(j)]);
    }
    return acc;
}

}  // namespace

SubspaceIdentityReport verify_subspace_identities(const SubspaceProjector& P, int trials,
                                                  std::uint64_t seed,
                                                  const ToleranceConfig& tol) {
    if (trials < 1) throw ConfigError("verify_subspace_identities: trials must be >= 1");
    SubspaceIdentityReport report;
    report.trials = trials;
    const double root_mu = std::sqrt(P.space()->total_mass());

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_stream(seed, static_cast<std::uint64_t>(t), 0, 0));

        // (a) unit f in W: squared distance to the constant-modulus set equals
        //     2 - 2 ||f||_1 / sqrt(mu), with the minimizer given by phase
        //     alignment.
        const L2Function f = random_unit_in_subspace(P, rng);
        const double d2 = distance_sq(f, nearest_constant_modulus(f));
        const double rhs_a = 2.0 - 2.0 * l2_norms(f).one_norm / root_mu;
        report.max_residual_unit_distance =
            std::max(report.max_residual_unit_distance, std::abs(d2 - rhs_a));

        // (b) constant-modulus g: ||g - Pg/||Pg|| ||^2 = 2 - 2 ||Pg||.
        const L2Function g = random_constant_modulus(P.space(), rng);
        const L2Function pg = P.project(g);
        const double pg_norm = l2_norms(pg).two_norm;
        if (pg_norm <= tol.inv_tol) {
            ++report.skipped;
            continue;
        }
        std::vector<Complex> unit(pg.values);
        for (Complex& v : unit) v /= pg_norm;
        const double d2b = distance_sq(g, L2Function(P.space(), std::move(unit)));
        report.max_residual_projection =
            std::max(report.max_residual_projection, std::abs(d2b - (2.0 - 2.0 * pg_norm)));
    }
    return report;
}

MembershipProbe find_constant_modulus_in_subspace(const SubspaceProjector& P, int restarts,
                                                  int iters, std::uint64_t seed,
                                                  const ToleranceConfig& tol) {
    if (restarts < 1 || iters < 1) {
        throw ConfigError("find_constant_modulus_in_subspace: restarts and iters must be >= 1");
    }
    MembershipProbe probe;
    probe.best_residual = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        Rng rng(derive_stream(seed, static_cast<std::uint64_t>(r), 0, 3));
        L2Function g = random_constant_modulus(P.space(), rng);
        for (int it = 0; it < iters; ++it) {
            const L2Function pg = P.project(g);
            probe.best_residual = std::min(probe.best_residual, std::sqrt(distance_sq(g, pg)));
            g = nearest_constant_modulus(pg);
        }
    }
    probe.found = probe.best_residual <= tol.eq_tol;
    return probe;
}

L2Function random_unit_in_subspace(const SubspaceProjector& P, Rng& rng) {
    const int m = P.space()->size();
    // Degenerate coefficient draws are re-rolled; the loop terminates almost
    // surely and in practice on the first pass.
    for (;;) {
        std::vector<Complex> out(static_cast<size_t>(m), Complex(0.0, 0.0));
        for (const L2Function& b : P.basis()) {
            const Complex coeff = rng.cgaussian();
            for (size_t j = 0; j < out.size(); ++j) out[j] += coeff * b.values[j];
        }
        L2Function f(P.space(), std::move(out));
        const double norm = l2_norms(f).two_norm;
        if (norm > 1e-9) {
            for (Complex& v : f.values) v /= norm;
            return f;
        }
    }
}

L2Function random_constant_modulus(const MeasureSpacePtr& space, Rng& rng) {
    const double target = 1.0 / std::sqrt(space->total_mass());
    std::vector<Complex> values;
    values.reserve(static_cast<size_t>(space->size()));
    for (int j = 0; j < space->size(); ++j) {
        const double theta = 2.0 * 3.14159265358979323846 * rng.uniform01();
        values.push_back(target * Complex(std::cos(theta), std::sin(theta)));
    }
    return L2Function(space, std::move(values));
}

}  // namespace cstar
