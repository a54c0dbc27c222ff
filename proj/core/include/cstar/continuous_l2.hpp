#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cstar/matrix.hpp"
#include "cstar/tolerance.hpp"

namespace cstar {

class Rng;

// Finite list of atoms with strictly positive weights; atoms are addressed by
// index. Total mass is the sum of the weights.
class FiniteMeasureSpace {
  public:
    explicit FiniteMeasureSpace(std::vector<double> weights);

    int size() const { return static_cast<int>(weights_.size()); }
    double weight(int j) const { return weights_[static_cast<size_t>(j)]; }
    const std::vector<double>& weights() const { return weights_; }
    double total_mass() const { return total_mass_; }

  private:
    std::vector<double> weights_;
    double total_mass_ = 0.0;
};

using MeasureSpacePtr = std::shared_ptr<const FiniteMeasureSpace>;

// Complex value per atom.
struct L2Function {
    MeasureSpacePtr space;
    std::vector<Complex> values;

    L2Function(MeasureSpacePtr sp, std::vector<Complex> vals);
    int size() const { return static_cast<int>(values.size()); }
};

struct L2Norms {
    double one_norm;
    double two_norm;
};

// (sum_j w_j |f_j|, sqrt(sum_j w_j |f_j|^2)). Always
// one_norm <= sqrt(total_mass) * two_norm.
L2Norms l2_norms(const L2Function& f);

// Weighted inner product sum_j w_j f_j conj(g_j).
Complex l2_inner(const L2Function& f, const L2Function& g);

// c_f = sum_j w_j (|f_j| / ||f||_2 - 1/sqrt(mu(X)))^2, in [0, 2]. Equals
// 2 - 2 ||f||_1 / (sqrt(mu(X)) ||f||_2). Throws ZeroFunction when
// ||f||_2 <= inv_tol.
double l2_exact_constant(const L2Function& f, const ToleranceConfig& tol = {});

struct L2ConstantReport {
    double cf = 0.0;                   // integral form
    double cf_closed_form = 0.0;       // 2 - 2 ||f||_1 / (sqrt(mu) ||f||_2)
    double distance = 0.0;             // closed-form infimum distance
    double norm_identity_residual = 0.0;      // ||f||_1 vs (1 - cf/2) sqrt(mu) ||f||_2
    double distance_identity_residual = 0.0;  // distance vs sqrt(cf)
};

// Three-way agreement between the norm identity, the integral form of the
// constant, and the closed-form distance to the constant-modulus set.
L2ConstantReport verify_l2_exact_constant(const L2Function& f, const ToleranceConfig& tol = {});

// sqrt(2 - 2 ||f||_1 / sqrt(mu(X))) for a unit vector f. The infimum over the
// constant-modulus set is attained by phase alignment atom by atom.
double distance_to_constant_modulus(const L2Function& f_unit, const ToleranceConfig& tol = {});

// The phase-aligned minimizer itself: g_j = phase(f_j) / sqrt(mu(X)), with
// phase(0) = 1.
L2Function nearest_constant_modulus(const L2Function& f);

// |f_j| = 1/sqrt(mu(X)) on every atom, within eq_tol.
bool is_constant_modulus(const L2Function& f, const ToleranceConfig& tol = {});

// Orthogonal projection onto a subspace spanned by a basis orthonormal with
// respect to the weighted inner product.
class SubspaceProjector {
  public:
    // Validates the basis Gram matrix against the identity within eq_tol.
    SubspaceProjector(MeasureSpacePtr space, std::vector<L2Function> basis,
                      const ToleranceConfig& tol = {});

    // Modified Gram-Schmidt (two passes) on raw spanning functions.
    static SubspaceProjector orthonormalize(MeasureSpacePtr space,
                                            const std::vector<L2Function>& raw,
                                            const ToleranceConfig& tol = {});

    L2Function project(const L2Function& h) const;

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<L2Function>& basis() const { return basis_; }
    const MeasureSpacePtr& space() const { return space_; }

  private:
    MeasureSpacePtr space_;
    std::vector<L2Function> basis_;
};

// Ph / ||Ph||, the closest unit vector of the subspace to h. Throws
// ProjectionZero when ||Ph||_2 <= inv_tol.
L2Function closest_unit_in_subspace(const L2Function& h, const SubspaceProjector& P,
                                    const ToleranceConfig& tol = {});

struct SubspaceIdentityReport {
    int trials = 0;
    int skipped = 0;  // trials whose projection was too small to normalize
    double max_residual_unit_distance = 0.0;  // dist^2 = 2 - 2 ||f||_1 / sqrt(mu)
    double max_residual_projection = 0.0;     // ||g - Pg/||Pg|| ||^2 = 2 - 2 ||Pg||
};

// Monte Carlo check of the two identities driving the subspace equivalences:
// (a) for random unit f in W, the squared distance to the constant-modulus
//     set equals 2 - 2 ||f||_1 / sqrt(mu(X));
// (b) for random constant-modulus g, ||g - Pg/||Pg|| ||^2 = 2 - 2 ||Pg||.
SubspaceIdentityReport verify_subspace_identities(const SubspaceProjector& P, int trials,
                                                  std::uint64_t seed,
                                                  const ToleranceConfig& tol = {});

struct MembershipProbe {
    bool found = false;
    double best_residual = 0.0;  // distance from the best candidate to W
};

// Best-effort feasibility probe: does W contain any constant-modulus function
// at all? Alternates projection onto W with per-atom modulus normalization
// from random phase starts. A negative answer is not a proof.
MembershipProbe find_constant_modulus_in_subspace(const SubspaceProjector& P, int restarts,
                                                  int iters, std::uint64_t seed,
                                                  const ToleranceConfig& tol = {});

// Random unit vector of the subspace (Gaussian coefficients on the basis).
L2Function random_unit_in_subspace(const SubspaceProjector& P, Rng& rng);

// Random constant-modulus function (i.i.d. uniform phases).
L2Function random_constant_modulus(const MeasureSpacePtr& space, Rng& rng);

}  // namespace cstar
