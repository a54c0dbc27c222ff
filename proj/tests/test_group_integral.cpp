#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "cstar/continuous_l2.hpp"
#include "cstar/errors.hpp"
#include "cstar/group_integral.hpp"
#include "cstar/hermitian.hpp"
#include "cstar/rng.hpp"

using cstar::CMatrix;
using cstar::Complex;
using cstar::FiniteGroupSpace;
using cstar::GroupFunction;

namespace {

GroupFunction scalar_group(const std::vector<double>& values) {
    std::vector<CMatrix> mats;
    for (double v : values) mats.push_back(CMatrix(1, 1, {Complex(v, 0)}));
    return GroupFunction(FiniteGroupSpace{static_cast<int>(values.size())}, std::move(mats));
}

// Diagonal PSD values rescaled so that (1/|G|) sum f(x)^2 = I exactly: each
// diagonal slot is divided by the root mean square over the group.
GroupFunction normalized_diagonal_group(int order, int k, cstar::Rng& rng) {
    std::vector<std::vector<double>> slots(static_cast<size_t>(k),
                                           std::vector<double>(static_cast<size_t>(order)));
    for (int d = 0; d < k; ++d) {
        double mean_sq = 0.0;
        for (int x = 0; x < order; ++x) {
            const double t = std::abs(rng.gaussian()) + 0.1;
            slots[static_cast<size_t>(d)][static_cast<size_t>(x)] = t;
            mean_sq += t * t;
        }
        mean_sq /= order;
        const double scale = 1.0 / std::sqrt(mean_sq);
        for (int x = 0; x < order; ++x)
            slots[static_cast<size_t>(d)][static_cast<size_t>(x)] *= scale;
    }
    std::vector<CMatrix> values;
    for (int x = 0; x < order; ++x) {
        std::vector<Complex> diag(static_cast<size_t>(k));
        for (int d = 0; d < k; ++d)
            diag[static_cast<size_t>(d)] =
                Complex(slots[static_cast<size_t>(d)][static_cast<size_t>(x)], 0);
        values.push_back(CMatrix::diagonal(diag));
    }
    return GroupFunction(FiniteGroupSpace{order}, std::move(values));
}

const double kRoot2 = std::sqrt(2.0);

}  // namespace

TEST_CASE("group functions validate order, shapes, and positivity") {
    CHECK_THROWS_AS(GroupFunction(FiniteGroupSpace{0}, {CMatrix::identity(1)}),
                    cstar::DomainError);
    CHECK_THROWS_AS(GroupFunction(FiniteGroupSpace{2}, {CMatrix::identity(1)}),
                    cstar::DimensionMismatch);
    CHECK_THROWS_AS(
        GroupFunction(FiniteGroupSpace{2}, {CMatrix::identity(1), CMatrix::identity(2)}),
        cstar::DimensionMismatch);
    CHECK_THROWS_AS(GroupFunction(FiniteGroupSpace{1},
                                  {CMatrix::diagonal({Complex(-1, 0), Complex(1, 0)})}),
                    cstar::NotPositive);
}

TEST_CASE("group inner product averages over the group") {
    const GroupFunction ones(FiniteGroupSpace{3},
                             {CMatrix::identity(2), CMatrix::identity(2), CMatrix::identity(2)});
    CHECK(cstar::frobenius_norm(cstar::kasparov_inner(ones, ones) - CMatrix::identity(2)) <=
          1e-14);

    // |G| = 2, k = 1, f = (sqrt(2), 0): <f, f> = (2 + 0)/2 = 1.
    const GroupFunction f = scalar_group({kRoot2, 0.0});
    CHECK(std::abs(cstar::kasparov_inner(f, f)(0, 0) - Complex(1, 0)) <= 1e-14);

    const GroupFunction zero = scalar_group({0.0, 0.0});
    CHECK(std::abs(cstar::kasparov_inner(f, zero)(0, 0)) <= 1e-15);

    cstar::Rng rng(7);
    const GroupFunction g = normalized_diagonal_group(6, 3, rng);
    const CMatrix gram = cstar::kasparov_inner(g, g);
    CHECK(cstar::loewner_leq(CMatrix(3, 3), gram));

    CHECK_THROWS_AS(cstar::kasparov_inner(f, ones), cstar::DimensionMismatch);
}

TEST_CASE("mean identity: worked cases") {
    // f = 1 identically: mean = 1, c = 0.
    const GroupFunction ones(FiniteGroupSpace{4},
                             {CMatrix::identity(2), CMatrix::identity(2), CMatrix::identity(2),
                              CMatrix::identity(2)});
    const cstar::GroupMeanReport rep = cstar::verify_group_mean_identity(ones);
    CHECK(cstar::frobenius_norm(rep.mean - CMatrix::identity(2)) <= 1e-14);
    CHECK(rep.c_norm <= 1e-14);
    CHECK(rep.residual <= 1e-12);

    // |G| = 2, f = (sqrt(2), 0): mean = sqrt(2)/2, c = 2 - sqrt(2).
    const cstar::GroupMeanReport sc = cstar::verify_group_mean_identity(scalar_group({kRoot2, 0.0}));
    CHECK(sc.mean(0, 0).real() == doctest::Approx(kRoot2 / 2.0).epsilon(1e-14));
    CHECK(sc.c_norm == doctest::Approx(2.0 - kRoot2).epsilon(1e-12));
    CHECK(sc.residual <= 1e-12);
    CHECK(sc.normalization_residual <= 1e-12);

    CHECK_THROWS_AS(cstar::verify_group_mean_identity(scalar_group({2.0, 2.0})),
                    cstar::NotNormalized);
}

TEST_CASE("mean identity holds on random normalized instances") {
    cstar::Rng rng(11);
    for (int trial = 0; trial < 24; ++trial) {
        const int order = 1 + static_cast<int>(rng.uniform_int(64));
        const int k = 1 + static_cast<int>(rng.uniform_int(3));
        const GroupFunction f = normalized_diagonal_group(order, k, rng);
        const cstar::GroupMeanReport rep = cstar::verify_group_mean_identity(f);
        CHECK(rep.normalization_residual <= 1e-10);
        CHECK(rep.residual <= 1e-9);
        CHECK(rep.c_norm >= -1e-12);
        CHECK(rep.c_norm <= 2.0 + 1e-9);
        for (double lambda : rep.c_spectrum) CHECK(lambda >= -1e-9);
        CHECK(cstar::loewner_leq(CMatrix(f.k(), f.k()), rep.c,
                                 cstar::ToleranceConfig{}));
    }
}

TEST_CASE("group constants agree with the l2 model on uniform weights") {
    // A nonnegative scalar function on |G| = m matches l2 on m atoms of
    // weight 1/m: both compute 2 - 2 mean for a unit vector.
    cstar::Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const int m = 1 + static_cast<int>(rng.uniform_int(32));
        std::vector<double> values(static_cast<size_t>(m));
        double mean_sq = 0.0;
        for (double& v : values) {
            v = std::abs(rng.gaussian()) + 0.05;
            mean_sq += v * v;
        }
        mean_sq /= m;
        for (double& v : values) v /= std::sqrt(mean_sq);

        const cstar::GroupMeanReport rep = cstar::verify_group_mean_identity(scalar_group(values));

        std::vector<Complex> cvals(values.size());
        for (size_t j = 0; j < values.size(); ++j) cvals[j] = Complex(values[j], 0);
        const auto sp = std::make_shared<const cstar::FiniteMeasureSpace>(
            std::vector<double>(static_cast<size_t>(m), 1.0 / m));
        const double cf = cstar::l2_exact_constant(cstar::L2Function(sp, std::move(cvals)));
        CHECK(std::abs(rep.c(0, 0).real() - cf) <= 1e-10);
    }
}
