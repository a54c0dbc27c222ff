#include "cstar/exact_constant.hpp"

#include <cmath>
#include <string>

namespace cstar {

namespace {

struct Pieces {
    CMatrix gram;      // G = <x, x>
    CMatrix sqrt_g;    // G^{1/2}
    CMatrix inv_sqrt;  // G^{-1/2}
    CMatrix ell1;      // S = sum (a_i a_i^*)^{1/2}
};

Pieces decompose(const ModuleVector& x, const ToleranceConfig& tol) {
    const GramData g = make_gram(x, tol);
    if (!g.invertible) throw NotInvertible("exact constant: <x, x> is not invertible");
    Pieces p;
    p.gram = g.gram.base;
    p.sqrt_g = sqrt_psd(g.gram, tol);
    p.inv_sqrt = *g.inv_sqrt_gram;
    p.ell1 = ell1_side(x, tol);
    return p;
}

CMatrix symmetrized_from(const Pieces& p, int n, int k) {
    const double root_n = std::sqrt(static_cast<double>(n));
    const CMatrix eye = CMatrix::identity(k);
    return 2.0 * eye - (1.0 / root_n) * (p.inv_sqrt * p.ell1) -
           (1.0 / root_n) * (p.ell1 * p.inv_sqrt);
}

CMatrix sum_form_from(const ModuleVector& x, const Pieces& p, const ToleranceConfig& tol) {
    const double inv_root_n = 1.0 / std::sqrt(static_cast<double>(x.n()));
    const CMatrix eye = CMatrix::identity(x.k());
    CMatrix sum(x.k(), x.k());
    for (int i = 0; i < x.n(); ++i) {
        const CMatrix b = p.inv_sqrt * abs_element(x[i], tol) - inv_root_n * eye;
        sum = sum + b * adjoint(b);
    }
    return sum;
}

}  // namespace

CMatrix exact_constant_symmetrized(const ModuleVector& x, const ToleranceConfig& tol) {
    const Pieces p = decompose(x, tol);
    return symmetrized_from(p, x.n(), x.k());
}

CMatrix exact_constant_sum_form(const ModuleVector& x, const ToleranceConfig& tol) {
    const Pieces p = decompose(x, tol);
    return sum_form_from(x, p, tol);
}

ModuleVector normalized_vector(const ModuleVector& x, const ToleranceConfig& tol) {
    const GramData g = make_gram(x, tol);
    if (!g.invertible) throw NotInvertible("normalized_vector: <x, x> is not invertible");
    return left_multiply(*g.inv_sqrt_gram, x);
}

ModuleVector constant_modulus_witness(const ModuleVector& x, const ToleranceConfig& tol) {
    const double inv_root_n = 1.0 / std::sqrt(static_cast<double>(x.n()));
    std::vector<CMatrix> entries;
    entries.reserve(static_cast<size_t>(x.n()));
    for (int i = 0; i < x.n(); ++i) {
        const HermElement h = herm_eig(x[i] * adjoint(x[i]), tol);
        if (!is_invertible(h, tol)) {
            throw NotInvertible("constant_modulus_witness: a_i a_i^* singular at index " +
                                std::to_string(i));
        }
        entries.push_back(inv_root_n * (inv_sqrt_pd(h, tol) * x[i]));
    }
    return ModuleVector(std::move(entries));
}

ConstantReport verify_exact_constant_identity(const ModuleVector& x, const ToleranceConfig& tol) {
    const Pieces p = decompose(x, tol);
    const double root_n = std::sqrt(static_cast<double>(x.n()));
    const CMatrix eye = CMatrix::identity(x.k());

    ConstantReport r;
    r.cx = symmetrized_from(p, x.n(), x.k());
    const CMatrix cx_sum = sum_form_from(x, p, tol);
    r.residual_defs_match = frobenius_norm(r.cx - cx_sum);
    r.cx_norm = norm_cstar(r.cx);

    // Two-sided identity with the constant taken from the sum form.
    const CMatrix lhs = p.ell1 * p.sqrt_g + p.sqrt_g * p.ell1;
    const CMatrix rhs = root_n * (p.sqrt_g * ((2.0 * eye - cx_sum) * p.sqrt_g));
    r.residual_identity = frobenius_norm(lhs - rhs);

    r.commutator_norm = frobenius_norm(p.gram * p.ell1 - p.ell1 * p.gram);
    r.commuting =
        r.commutator_norm <= tol.eq_tol * frobenius_norm(p.gram) * frobenius_norm(p.ell1);

    r.upper_bound_sqrt_cx_norm = std::sqrt(std::max(r.cx_norm, 0.0));
    r.residual_one_sided =
        frobenius_norm((1.0 / root_n) * (p.ell1 * p.inv_sqrt) - (eye - 0.5 * r.cx));

    // Witness distance, when every a_i a_i^* is invertible.
    try {
        const ModuleVector witness = constant_modulus_witness(x, tol);
        const ModuleVector target = left_multiply(p.inv_sqrt, x);
        r.distance_found = module_norm(target - witness);
    } catch (const NotInvertible&) {
        r.distance_found.reset();
    }
    return r;
}

ConstantReport verify_commuting_factorization(const ModuleVector& x, const ToleranceConfig& tol) {
    ConstantReport r = verify_exact_constant_identity(x, tol);
    if (!r.commuting) {
        throw CommutatorTooLarge("verify_commuting_factorization: ||[G, S]||_F = " +
                                 std::to_string(r.commutator_norm));
    }
    const Pieces p = decompose(x, tol);
    const double root_n = std::sqrt(static_cast<double>(x.n()));
    const CMatrix eye = CMatrix::identity(x.k());
    const CMatrix one_minus_half = eye - 0.5 * r.cx;

    const double res_left = frobenius_norm(p.ell1 - root_n * (one_minus_half * p.sqrt_g));
    const double res_right = frobenius_norm(p.ell1 - root_n * (p.sqrt_g * one_minus_half));
    r.residual_factorization = std::max(res_left, res_right);

    r.one_minus_half_cx_norm = norm_cstar(one_minus_half);
    r.one_minus_half_cx_lambda_max = herm_eig(one_minus_half, tol).eigenvalues.back();

    if (x.k() == 1) {
        // Scalar threshold equivalence: S <= sqrt(s) G^{1/2} iff
        // 1 - cx/2 <= sqrt(s/n), sampled away from the critical point.
        const double gamma = one_minus_half(0, 0).real();
        const double n = static_cast<double>(x.n());
        const double critical = n * gamma * gamma;
        bool ok = true;
        for (double factor : {0.25, 0.8, 1.25, 4.0}) {
            const double s = critical * factor;
            const bool lhs = loewner_leq(p.ell1, std::sqrt(s) * p.sqrt_g, tol);
            const bool rhs = gamma <= std::sqrt(s / n) + tol.eq_tol;
            if (lhs != rhs) ok = false;
        }
        r.scalar_equivalence_ok = ok;
    }
    return r;
}

DistanceBound constant_modulus_distance_bound(const ModuleVector& x, const ToleranceConfig& tol) {
    const ModuleVector witness = constant_modulus_witness(x, tol);
    const ModuleVector target = normalized_vector(x, tol);
    const CMatrix cx = exact_constant_symmetrized(x, tol);
    DistanceBound b;
    b.bound = std::sqrt(std::max(norm_cstar(cx), 0.0));
    b.witness_distance = module_norm(target - witness);
    return b;
}

UnitGramBound unit_gram_distance_bound(const ModuleVector& x, double dist_lower,
                                       const ToleranceConfig& tol) {
    const CMatrix gram = inner_product(x, x);
    const double res = frobenius_norm(gram - CMatrix::identity(x.k()));
    if (res > tol.eq_tol) {
        throw GramNotUnit("unit_gram_distance_bound: ||<x,x> - 1||_F = " + std::to_string(res));
    }
    const double root_n = std::sqrt(static_cast<double>(x.n()));
    const CMatrix inner = 2.0 * CMatrix::identity(x.k()) - (2.0 / root_n) * ell1_side(x, tol);
    UnitGramBound b;
    b.rhs = std::sqrt(std::max(norm_cstar(inner), 0.0));
    b.holds = dist_lower <= b.rhs + tol.eq_tol;
    return b;
}

}  // namespace cstar
