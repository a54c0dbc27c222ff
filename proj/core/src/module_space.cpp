#include "cstar/module_space.hpp"

#include <cmath>
#include <iostream>
#include <string>

namespace cstar {

ModuleVector::ModuleVector(std::vector<CMatrix> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DimensionMismatch("ModuleVector: needs at least one entry");
    const int k = entries_[0].rows();
    for (const CMatrix& e : entries_) {
        require_square(e, "ModuleVector");
        if (e.rows() != k) {
            throw DimensionMismatch("ModuleVector: entries must share one dimension");
        }
    }
}

ModuleVector operator-(const ModuleVector& x, const ModuleVector& y) {
    if (x.n() != y.n() || x.k() != y.k()) {
        throw DimensionMismatch("ModuleVector: operator- shape mismatch");
    }
    std::vector<CMatrix> out;
    out.reserve(static_cast<size_t>(x.n()));
    for (int i = 0; i < x.n(); ++i) out.push_back(x[i] - y[i]);
    return ModuleVector(std::move(out));
}

ModuleVector operator*(Complex s, const ModuleVector& x) {
    std::vector<CMatrix> out;
    out.reserve(static_cast<size_t>(x.n()));
    for (int i = 0; i < x.n(); ++i) out.push_back(s * x[i]);
    return ModuleVector(std::move(out));
}

ModuleVector operator*(double s, const ModuleVector& x) { return Complex(s, 0.0) * x; }

ModuleVector left_multiply(const CMatrix& m, const ModuleVector& x) {
    std::vector<CMatrix> out;
    out.reserve(static_cast<size_t>(x.n()));
    for (int i = 0; i < x.n(); ++i) out.push_back(m * x[i]);
    return ModuleVector(std::move(out));
}

CMatrix inner_product(const ModuleVector& x, const ModuleVector& y) {
    if (x.n() != y.n() || x.k() != y.k()) {
        throw DimensionMismatch("inner_product: shape mismatch");
    }
    CMatrix sum(x.k(), x.k());
    for (int i = 0; i < x.n(); ++i) sum = sum + x[i] * adjoint(y[i]);
    return sum;
}

double module_norm(const ModuleVector& x) {
    return std::sqrt(std::max(norm_cstar(inner_product(x, x)), 0.0));
}

CMatrix ell1_side(const ModuleVector& x, const ToleranceConfig& tol) {
    CMatrix sum(x.k(), x.k());
    for (int i = 0; i < x.n(); ++i) sum = sum + abs_element(x[i], tol);
    return sum;
}

CMatrix ell2_side(const ModuleVector& x, const ToleranceConfig& tol) {
    const CMatrix gram = inner_product(x, x);
    return std::sqrt(static_cast<double>(x.n())) * sqrt_psd(herm_eig(gram, tol), tol);
}

double ell12_margin(const ModuleVector& x, const ToleranceConfig& tol) {
    const CMatrix diff = ell2_side(x, tol) - ell1_side(x, tol);
    return herm_eig(diff, tol).eigenvalues.front();
}

bool check_ell12_inequality(const ModuleVector& x, const ToleranceConfig& tol) {
    const CMatrix diff = ell2_side(x, tol) - ell1_side(x, tol);
    const double margin = herm_eig(diff, tol).eigenvalues.front();
    const bool ok = margin >= -tol.psd_tol * (1.0 + frobenius_norm(diff));
    if (!ok) {
        std::cerr << "check_ell12_inequality: violated, min eigenvalue of difference = "
                  << margin << "\n";
    }
    return ok;
}

bool check_cauchy_schwarz(const ModuleVector& x, const ModuleVector& y,
                          const ToleranceConfig& tol) {
    const CMatrix xy = inner_product(x, y);
    const CMatrix lhs = xy * adjoint(xy);
    const CMatrix rhs = norm_cstar(inner_product(y, y)) * inner_product(x, x);
    return loewner_leq(lhs, rhs, tol);
}

bool is_constant_modulus(const ModuleVector& y, const ToleranceConfig& tol) {
    const double root_n = std::sqrt(static_cast<double>(y.n()));
    const CMatrix eye = CMatrix::identity(y.k());
    for (int i = 0; i < y.n(); ++i) {
        const CMatrix c = root_n * y[i];
        if (frobenius_norm(c * adjoint(c) - eye) > tol.eq_tol) return false;
        // For square matrices co-isometry forces unitarity; checked anyway.
        if (frobenius_norm(adjoint(c) * c - eye) > tol.eq_tol) return false;
    }
    return true;
}

GramData make_gram(const ModuleVector& x, const ToleranceConfig& tol) {
    GramData g;
    g.gram = herm_eig(inner_product(x, x), tol);
    g.invertible = is_invertible(g.gram, tol);
    if (g.invertible) {
        CMatrix inv_sqrt = inv_sqrt_pd(g.gram, tol);
        const CMatrix recon = inv_sqrt * g.gram.base * inv_sqrt;
        const double res = frobenius_norm(recon - CMatrix::identity(x.k()));
        if (res > tol.eq_tol) {
            throw Error("make_gram: inverse square root fails the identity check, residual " +
                        std::to_string(res));
        }
        g.inv_sqrt_gram = std::move(inv_sqrt);
    }
    return g;
}

}  // namespace cstar
