#include "cstar/group_integral.hpp"

#include <string>
#include <utility>

namespace cstar {

GroupFunction::GroupFunction(FiniteGroupSpace space, std::vector<CMatrix> values,
                             const ToleranceConfig& tol)
    : space_(space), values_(std::move(values)) {
    if (space_.order < 1) throw DomainError("GroupFunction: group order must be >= 1");
    if (static_cast<int>(values_.size()) != space_.order) {
        throw DimensionMismatch("GroupFunction: " + std::to_string(values_.size()) +
                                " values on a group of order " + std::to_string(space_.order));
    }
    k_ = values_[0].rows();
    const CMatrix zero(k_, k_);
    for (const CMatrix& v : values_) {
        require_square(v, "GroupFunction");
        if (v.rows() != k_) throw DimensionMismatch("GroupFunction: mixed value dimensions");
        if (!loewner_leq(zero, v, tol)) {
            throw NotPositive("GroupFunction: values must be positive semidefinite");
        }
    }
}

CMatrix kasparov_inner(const GroupFunction& f, const GroupFunction& g) {
    if (f.space().order != g.space().order || f.k() != g.k()) {
        throw DimensionMismatch("kasparov_inner: functions live on different spaces");
    }
    CMatrix acc(f.k(), f.k());
    for (int x = 0; x < f.space().order; ++x) {
        acc = acc + f.values()[static_cast<size_t>(x)] * adjoint(g.values()[static_cast<size_t>(x)]);
    }
    return (1.0 / static_cast<double>(f.space().order)) * acc;
}

CMatrix group_mean(const GroupFunction& f) {
    CMatrix acc(f.k(), f.k());
    for (const CMatrix& v : f.values()) acc = acc + v;
    return (1.0 / static_cast<double>(f.space().order)) * acc;
}

GroupMeanReport verify_group_mean_identity(const GroupFunction& f, const ToleranceConfig& tol) {
    const CMatrix eye = CMatrix::identity(f.k());
    const CMatrix gram = kasparov_inner(f, f);
    const double normalization = frobenius_norm(gram - eye);
    if (normalization > tol.eq_tol) {
        throw NotNormalized("verify_group_mean_identity: ||<f,f> - 1||_F = " +
                            std::to_string(normalization));
    }

    // <f - 1, f - 1> expanded over the shifted function; values of f - 1 need
    // not be positive, so the difference is formed directly.
    CMatrix c(f.k(), f.k());
    for (const CMatrix& v : f.values()) {
        const CMatrix shifted = v - eye;
        c = c + shifted * adjoint(shifted);
    }
    c = (1.0 / static_cast<double>(f.space().order)) * c;

    GroupMeanReport report;
    report.mean = group_mean(f);
    report.c = c;
    report.residual = frobenius_norm(c - (2.0 * eye - 2.0 * report.mean));
    report.normalization_residual = normalization;

    const HermElement ch = herm_eig(c, tol);
    report.c_spectrum = ch.eigenvalues;
    report.c_norm = norm_cstar(c);
    return report;
}

}  // namespace cstar
