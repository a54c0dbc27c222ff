#pragma once

#include <vector>

#include "cstar/hermitian.hpp"

namespace cstar {

// Finite group carrying the normalized counting measure: every element has
// weight 1/order. Only the measure enters the identities checked here, so the
// group law is not represented.
struct FiniteGroupSpace {
    int order = 0;
};

// Function on a finite group with positive-semidefinite matrix values.
class GroupFunction {
  public:
    GroupFunction(FiniteGroupSpace space, std::vector<CMatrix> values,
                  const ToleranceConfig& tol = {});

    const FiniteGroupSpace& space() const { return space_; }
    int k() const { return k_; }
    const std::vector<CMatrix>& values() const { return values_; }

  private:
    FiniteGroupSpace space_;
    int k_ = 0;
    std::vector<CMatrix> values_;
};

// <f, g> = (1/|G|) sum_x f(x) g(x)^*.
CMatrix kasparov_inner(const GroupFunction& f, const GroupFunction& g);

// (1/|G|) sum_x f(x).
CMatrix group_mean(const GroupFunction& f);

struct GroupMeanReport {
    CMatrix mean;                  // integral of f
    CMatrix c;                     // <f - 1, f - 1>, positive semidefinite
    double residual = 0.0;         // ||c - (2 - 2 mean)||_F
    double c_norm = 0.0;
    std::vector<double> c_spectrum;
    double normalization_residual = 0.0;  // ||<f, f> - 1||_F
};

// For f with <f, f> = 1 (within eq_tol; otherwise NotNormalized), checks the
// identity <f - 1, f - 1> = 2 - 2 (1/|G|) sum_x f(x), which ties the mean of f
// to the constant c. c is operator-valued; its norm and spectrum are reported.
GroupMeanReport verify_group_mean_identity(const GroupFunction& f,
                                           const ToleranceConfig& tol = {});

}  // namespace cstar
