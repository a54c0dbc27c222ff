#include "cstar/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace cstar {

double hermitian_residual(const CMatrix& a) {
    double r = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r = std::max(r, std::abs(a(i, j) - std::conj(a(j, i))));
    return r;
}

void require_hermitian(const CMatrix& a, const ToleranceConfig& tol, const char* where) {
    require_square(a, where);
    const double res = hermitian_residual(a);
    const double scale = 1.0 + max_abs_entry(a);
    if (res > tol.herm_tol * scale) {
        throw NotHermitian(std::string(where) + ": symmetry residual " + std::to_string(res) +
                           " exceeds tolerance");
    }
}

namespace {

constexpr double kOffDiagTol = 1e-14;
constexpr int kMaxSweeps = 100;

double off_diagonal_mass(const CMatrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

// One cyclic sweep of complex Jacobi rotations on the Hermitian working copy
// m, accumulating the transform into v. Each pivot (p, q) is annihilated by
// the unitary that diagonalizes the phase-rotated real 2x2 block: with
// g = m(p,q) = r e^{i phi}, the block diag(1, e^{-i phi}) conjugation makes
// the pivot real, then a Givens rotation with
//   tau = (m_qq - m_pp) / (2 r),  t = sgn(tau) / (|tau| + sqrt(1 + tau^2))
// zeroes it; the new diagonal entries are m_pp - t r and m_qq + t r.
void jacobi_sweep(CMatrix& m, CMatrix& v) {
    const int k = m.rows();
    for (int p = 0; p < k - 1; ++p) {
        for (int q = p + 1; q < k; ++q) {
            const Complex g = m(p, q);
            const double r = std::abs(g);
            if (r == 0.0) continue;

            const Complex phase = g / r;  // e^{i phi}
            const double alpha = m(p, p).real();
            const double beta = m(q, q).real();
            const double tau = (beta - alpha) / (2.0 * r);
            const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                          : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            // Column update by G: columns p and q of m and v.
            const Complex gqp = -s * std::conj(phase);
            const Complex gqq = c * std::conj(phase);
            for (int i = 0; i < k; ++i) {
                const Complex mp = m(i, p), mq = m(i, q);
                m(i, p) = mp * c + mq * gqp;
                m(i, q) = mp * s + mq * gqq;
                const Complex vp = v(i, p), vq = v(i, q);
                v(i, p) = vp * c + vq * gqp;
                v(i, q) = vp * s + vq * gqq;
            }
            // Row update by G*: rows p and q of m.
            for (int j = 0; j < k; ++j) {
                const Complex rp = m(p, j), rq = m(q, j);
                m(p, j) = c * rp - s * phase * rq;
                m(q, j) = s * rp + c * phase * rq;
            }
            // Closed forms for the 2x2 block keep the diagonal exactly real
            // and the pivot exactly zero.
            m(p, p) = Complex(alpha - t * r, 0.0);
            m(q, q) = Complex(beta + t * r, 0.0);
            m(p, q) = Complex(0.0, 0.0);
            m(q, p) = Complex(0.0, 0.0);
        }
    }
}

}  // namespace

HermElement herm_eig(const CMatrix& a, const ToleranceConfig& tol) {
    require_hermitian(a, tol, "herm_eig");
    const int k = a.rows();

    // Work on the Hermitian average so roundoff asymmetry in the input does
    // not leak into the rotations.
    CMatrix m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

    CMatrix v = CMatrix::identity(k);
    const double target = kOffDiagTol * frobenius_norm(a);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_mass(m) <= target) break;
        jacobi_sweep(m, v);
    }

    std::vector<double> eigs(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) eigs[static_cast<size_t>(i)] = m(i, i).real();

    std::vector<int> order(static_cast<size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int lhs, int rhs) { return eigs[static_cast<size_t>(lhs)] <
                                                    eigs[static_cast<size_t>(rhs)]; });

    HermElement out;
    out.base = a;
    out.eigenvalues.resize(static_cast<size_t>(k));
    out.eigenvectors = CMatrix(k, k);
    for (int j = 0; j < k; ++j) {
        const int src = order[static_cast<size_t>(j)];
        out.eigenvalues[static_cast<size_t>(j)] = eigs[static_cast<size_t>(src)];
        for (int i = 0; i < k; ++i) out.eigenvectors(i, j) = v(i, src);
    }
    out.cached = true;

    // Reconstruction and orthonormality gates.
    CMatrix lam = CMatrix(k, k);
    for (int i = 0; i < k; ++i) lam(i, i) = out.eigenvalues[static_cast<size_t>(i)];
    const double recon =
        frobenius_norm(out.eigenvectors * lam * adjoint(out.eigenvectors) - a);
    if (recon > tol.recon_tol * (1.0 + frobenius_norm(a))) {
        throw Error("herm_eig: reconstruction residual " + std::to_string(recon) +
                    " exceeds tolerance");
    }
    const double orth =
        frobenius_norm(adjoint(out.eigenvectors) * out.eigenvectors - CMatrix::identity(k));
    if (orth > tol.recon_tol) {
        throw Error("herm_eig: eigenvector basis not orthonormal");
    }
    return out;
}

namespace {

CMatrix assemble(const HermElement& a, const std::vector<Complex>& fvals) {
    const int k = a.dim();
    // V diag(fvals) V*.
    CMatrix w = a.eigenvectors;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) w(i, j) *= fvals[static_cast<size_t>(j)];
    return w * adjoint(a.eigenvectors);
}

}  // namespace

CMatrix matrix_fn(const HermElement& a, const SpectralFn& f) {
    if (!a.cached) throw Error("matrix_fn: decomposition not cached");
    std::vector<Complex> vals;
    vals.reserve(a.eigenvalues.size());
    for (double lam : a.eigenvalues) {
        if (f.domain && !f.domain(lam)) {
            throw DomainError(std::string("matrix_fn: eigenvalue ") + std::to_string(lam) +
                              " outside the domain of " + f.name);
        }
        vals.emplace_back(f.apply(lam), 0.0);
    }
    return assemble(a, vals);
}

CMatrix matrix_fn(const HermElement& a, const std::function<Complex(double)>& f) {
    if (!a.cached) throw Error("matrix_fn: decomposition not cached");
    std::vector<Complex> vals;
    vals.reserve(a.eigenvalues.size());
    for (double lam : a.eigenvalues) vals.push_back(f(lam));
    return assemble(a, vals);
}

CMatrix sqrt_psd(const HermElement& a, const ToleranceConfig& tol) {
    if (!a.cached) throw Error("sqrt_psd: decomposition not cached");
    double max_abs = 0.0;
    for (double lam : a.eigenvalues) max_abs = std::max(max_abs, std::abs(lam));
    const double clamp = tol.psd_tol * (1.0 + max_abs);
    SpectralFn f{"sqrt",
                 [](double lam) { return std::sqrt(std::max(lam, 0.0)); },
                 [clamp](double lam) { return lam >= -clamp; }};
    return matrix_fn(a, f);
}

CMatrix inv_sqrt_pd(const HermElement& a, const ToleranceConfig& tol) {
    if (!a.cached) throw Error("inv_sqrt_pd: decomposition not cached");
    if (!is_invertible(a, tol)) {
        throw NotInvertible("inv_sqrt_pd: spectrum reaches the invertibility threshold");
    }
    if (a.eigenvalues.front() < 0.0) {
        throw DomainError("inv_sqrt_pd: negative eigenvalue");
    }
    SpectralFn f{"inv_sqrt", [](double lam) { return 1.0 / std::sqrt(lam); }, nullptr};
    return matrix_fn(a, f);
}

CMatrix abs_element(const CMatrix& a, const ToleranceConfig& tol) {
    require_square(a, "abs_element");
    return sqrt_psd(herm_eig(a * adjoint(a), tol), tol);
}

bool is_invertible(const HermElement& a, const ToleranceConfig& tol) {
    if (!a.cached) throw Error("is_invertible: decomposition not cached");
    double min_abs = std::abs(a.eigenvalues.front());
    double max_abs = 0.0;
    for (double lam : a.eigenvalues) {
        min_abs = std::min(min_abs, std::abs(lam));
        max_abs = std::max(max_abs, std::abs(lam));
    }
    return min_abs >= tol.inv_tol * std::max(1.0, max_abs);
}

double loewner_margin(const CMatrix& a, const CMatrix& b, const ToleranceConfig& tol) {
    require_hermitian(a, tol, "loewner_margin");
    require_hermitian(b, tol, "loewner_margin");
    require_same_shape(a, b, "loewner_margin");
    const HermElement d = herm_eig(b - a, tol);
    return d.eigenvalues.front();
}

bool loewner_leq(const CMatrix& a, const CMatrix& b, const ToleranceConfig& tol) {
    require_hermitian(a, tol, "loewner_leq");
    require_hermitian(b, tol, "loewner_leq");
    require_same_shape(a, b, "loewner_leq");
    const CMatrix d = b - a;
    const HermElement h = herm_eig(d, tol);
    return h.eigenvalues.front() >= -tol.psd_tol * (1.0 + frobenius_norm(d));
}

double norm_cstar(const CMatrix& a) {
    const HermElement h = herm_eig(a * adjoint(a));
    return std::sqrt(std::max(h.eigenvalues.back(), 0.0));
}

CMatrix polar_unitary(const CMatrix& a, const ToleranceConfig& tol) {
    require_square(a, "polar_unitary");
    const HermElement h = herm_eig(adjoint(a) * a, tol);
    return a * inv_sqrt_pd(h, tol);
}

}  // namespace cstar
