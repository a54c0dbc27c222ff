#pragma once

#include <functional>
#include <vector>

#include "cstar/matrix.hpp"
#include "cstar/tolerance.hpp"

namespace cstar {

/// A Hermitian matrix together with its (optional) spectral decomposition.
/// When cached, base == eigenvectors * diag(eigenvalues) * eigenvectors^* up
/// to recon_tol and the eigenvalues are sorted nondecreasing.
struct HermElement {
    CMatrix base;
    std::vector<double> eigenvalues;
    CMatrix eigenvectors;  // unitary, column j pairs with eigenvalues[j]
    bool cached = false;

    int dim() const { return base.rows(); }
};

// max-entry magnitude of (a - a*).
double hermitian_residual(const CMatrix& a);

// Throws NotHermitian unless the residual is within
// herm_tol * (1 + max-entry magnitude of a).
void require_hermitian(const CMatrix& a, const ToleranceConfig& tol, const char* where);

// Spectral decomposition of a Hermitian matrix by cyclic Jacobi rotations.
// Deterministic: identical input yields bitwise-identical output. Sweeps run
// in fixed row order until the off-diagonal Frobenius mass drops below
// 1e-14 * ||a||_F (at most 100 sweeps).
HermElement herm_eig(const CMatrix& a, const ToleranceConfig& tol = {});

// Real scalar function applied on the spectrum, with its admissible domain.
struct SpectralFn {
    const char* name;
    std::function<double(double)> apply;
    std::function<bool(double)> domain;  // null means everywhere
};

// V f(Lambda) V*. Throws DomainError when an eigenvalue falls outside
// f.domain.
CMatrix matrix_fn(const HermElement& a, const SpectralFn& f);

// Same with a complex-valued spectral function (result need not be Hermitian).
CMatrix matrix_fn(const HermElement& a, const std::function<Complex(double)>& f);

// Square root of a positive-semidefinite element. Eigenvalues in
// [-psd_tol * (1 + max|lambda|), 0) are clamped to zero; anything lower is a
// DomainError.
CMatrix sqrt_psd(const HermElement& a, const ToleranceConfig& tol = {});

// Inverse square root; requires min lambda >= inv_tol * max(1, max|lambda|).
CMatrix inv_sqrt_pd(const HermElement& a, const ToleranceConfig& tol = {});

// (a a*)^{1/2}, defined for every square matrix.
CMatrix abs_element(const CMatrix& a, const ToleranceConfig& tol = {});

// min |lambda| >= inv_tol * max(1, max|lambda|).
bool is_invertible(const HermElement& a, const ToleranceConfig& tol = {});

// lambda_min(b - a). Both arguments must be Hermitian and of equal dimension.
double loewner_margin(const CMatrix& a, const CMatrix& b, const ToleranceConfig& tol = {});

// a <= b in the Loewner order: lambda_min(b - a) >= -psd_tol * (1 + ||b - a||_F).
bool loewner_leq(const CMatrix& a, const CMatrix& b, const ToleranceConfig& tol = {});

// Largest singular value (the C*-norm of a matrix element).
double norm_cstar(const CMatrix& a);

// Unitary polar factor a (a* a)^{-1/2}; requires a of full rank per inv_tol.
CMatrix polar_unitary(const CMatrix& a, const ToleranceConfig& tol = {});

}  // namespace cstar
