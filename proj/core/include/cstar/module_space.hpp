#pragma once

#include <optional>
#include <vector>

#include "cstar/hermitian.hpp"

namespace cstar {

// Element of the module A^n over the algebra A of k x k complex matrices:
// an n-tuple of square matrices of one common dimension.
class ModuleVector {
  public:
    ModuleVector() = default;
    explicit ModuleVector(std::vector<CMatrix> entries);

    int n() const { return static_cast<int>(entries_.size()); }
    int k() const { return entries_.empty() ? 0 : entries_[0].rows(); }

    const CMatrix& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<CMatrix>& entries() const { return entries_; }

    bool operator==(const ModuleVector& other) const = default;

  private:
    std::vector<CMatrix> entries_;
};

ModuleVector operator-(const ModuleVector& x, const ModuleVector& y);
ModuleVector operator*(Complex s, const ModuleVector& x);
ModuleVector operator*(double s, const ModuleVector& x);

// (m a_1, ..., m a_n).
ModuleVector left_multiply(const CMatrix& m, const ModuleVector& x);

// <x, y> = sum_i a_i b_i^*.
CMatrix inner_product(const ModuleVector& x, const ModuleVector& y);

// ||x|| = ||<x, x>||^{1/2}.
double module_norm(const ModuleVector& x);

// sum_i (a_i a_i^*)^{1/2}.
CMatrix ell1_side(const ModuleVector& x, const ToleranceConfig& tol = {});

// sqrt(n) (sum_i a_i a_i^*)^{1/2}.
CMatrix ell2_side(const ModuleVector& x, const ToleranceConfig& tol = {});

// lambda_min(ell2_side - ell1_side); nonnegative up to roundoff for every x.
double ell12_margin(const ModuleVector& x, const ToleranceConfig& tol = {});

// ell1_side <= ell2_side in the Loewner order. Holds for every input; a false
// return signals a numerical defect and is logged to stderr with the margin.
bool check_ell12_inequality(const ModuleVector& x, const ToleranceConfig& tol = {});

// <x,y><y,x> <= ||<y,y>|| <x,x> in the Loewner order; holds for every input.
bool check_cauchy_schwarz(const ModuleVector& x, const ModuleVector& y,
                          const ToleranceConfig& tol = {});

// y = (1/sqrt(n))(c_1, ..., c_n) with c_i c_i^* = 1 for every i. Both
// c_i c_i^* and c_i^* c_i are checked; for square matrices they coincide.
bool is_constant_modulus(const ModuleVector& y, const ToleranceConfig& tol = {});

// <x, x> with its decomposition, invertibility verdict and, when invertible,
// the inverse square root validated against the identity.
struct GramData {
    HermElement gram;
    std::optional<CMatrix> inv_sqrt_gram;
    bool invertible = false;
};

GramData make_gram(const ModuleVector& x, const ToleranceConfig& tol = {});

}  // namespace cstar
