#pragma once

namespace cstar {

// Tolerances for the floating-point reading of algebraic statements.
// eq_tol is the reference knob: scaled(eq) derives a full set from a new
// eq_tol, keeping the default ratios between the members.
struct ToleranceConfig {
    double herm_tol  = 1e-10;  // symmetry residual accepted as Hermitian
    double psd_tol   = 1e-9;   // eigenvalue clamp window / Loewner slack
    double recon_tol = 1e-9;   // eigendecomposition reconstruction residual
    double eq_tol    = 1e-8;   // residual accepted as an identity
    double inv_tol   = 1e-10;  // relative invertibility threshold

    void validate() const;
    static ToleranceConfig scaled(double eq);
};

}  // namespace cstar
