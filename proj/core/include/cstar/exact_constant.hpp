#pragma once

#include <optional>

#include "cstar/module_space.hpp"

namespace cstar {

// Result of computing the exact-constant element c_x of a module vector and
// checking the identities that define it. Residuals are Frobenius norms.
struct ConstantReport {
    CMatrix cx;                       // symmetrized form, Hermitian
    double cx_norm = 0.0;             // C*-norm of cx
    double residual_identity = 0.0;   // two-sided identity, cx from the sum form
    double residual_defs_match = 0.0; // distance between the two cx formulas
    bool commuting = false;           // [<x,x>, ell1_side] negligible
    double commutator_norm = 0.0;
    double upper_bound_sqrt_cx_norm = 0.0;
    std::optional<double> distance_found;  // witness distance, when defined

    // Diagnostics.
    double residual_one_sided = 0.0;  // ||S G^{-1/2}/sqrt(n) - (1 - cx/2)||_F
    std::optional<double> residual_factorization;  // commuting-case identity
    std::optional<double> one_minus_half_cx_norm;
    std::optional<double> one_minus_half_cx_lambda_max;
    std::optional<bool> scalar_equivalence_ok;  // k = 1 threshold equivalence
};

// c_x = 2 - G^{-1/2} S / sqrt(n) - S G^{-1/2} / sqrt(n), with G = <x,x> and
// S = ell1_side(x). Requires G invertible.
CMatrix exact_constant_symmetrized(const ModuleVector& x, const ToleranceConfig& tol = {});

// c_x = sum_i b_i b_i^* with b_i = G^{-1/2} (a_i a_i^*)^{1/2} - 1/sqrt(n).
// Positive semidefinite by construction. Requires G invertible.
CMatrix exact_constant_sum_form(const ModuleVector& x, const ToleranceConfig& tol = {});

// Computes c_x by both formulas, then checks
//   S G^{1/2} + G^{1/2} S = sqrt(n) G^{1/2} (2 - c_x) G^{1/2}
// with c_x taken from the sum form. The residual is an identity up to
// roundoff for every x with invertible Gram.
ConstantReport verify_exact_constant_identity(const ModuleVector& x,
                                              const ToleranceConfig& tol = {});

// Commuting case: checks S = (1 - c_x/2) sqrt(n) G^{1/2} and the reversed
// product. Throws CommutatorTooLarge unless ||[G, S]||_F <= eq_tol ||G||_F ||S||_F.
// For k = 1 additionally checks the threshold equivalence
//   S <= sqrt(s) G^{1/2}  <=>  1 - c_x/2 <= sqrt(s/n)
// over sampled s; for k > 1 only records ||1 - c_x/2|| and its top eigenvalue.
ConstantReport verify_commuting_factorization(const ModuleVector& x,
                                              const ToleranceConfig& tol = {});

// G^{-1/2} x, the unit-Gram normalization of x.
ModuleVector normalized_vector(const ModuleVector& x, const ToleranceConfig& tol = {});

// (1/sqrt(n)) ((a_1 a_1^*)^{-1/2} a_1, ..., (a_n a_n^*)^{-1/2} a_n).
// Constant modulus; requires every a_i a_i^* invertible (the exception names
// the first failing index).
ModuleVector constant_modulus_witness(const ModuleVector& x, const ToleranceConfig& tol = {});

struct DistanceBound {
    double bound;             // sqrt(||c_x||)
    double witness_distance;  // ||G^{-1/2} x - witness||, equals bound exactly
};

// Upper bound on the distance from G^{-1/2} x to the constant-modulus set,
// together with the witness that realizes it.
DistanceBound constant_modulus_distance_bound(const ModuleVector& x,
                                              const ToleranceConfig& tol = {});

struct UnitGramBound {
    bool holds;
    double rhs;  // ||2 - (2/sqrt(n)) ell1_side(x)||^{1/2}
};

// For x with <x,x> = 1: checks dist_lower <= rhs + eq_tol. Throws GramNotUnit
// when the Gram is not the identity within eq_tol.
UnitGramBound unit_gram_distance_bound(const ModuleVector& x, double dist_lower,
                                       const ToleranceConfig& tol = {});

}  // namespace cstar
