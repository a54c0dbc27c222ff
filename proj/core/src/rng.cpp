#include "cstar/rng.hpp"

#include <cmath>
#include <numbers>

namespace cstar {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int r) { return (v << r) | (v >> (64 - r)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
    // xoshiro256**
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::cgaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

int Rng::uniform_int(int n) {
    return static_cast<int>((static_cast<unsigned __int128>(next_u64()) *
                             static_cast<unsigned __int128>(n)) >> 64);
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) {
    std::uint64_t s = seed;
    std::uint64_t out = splitmix64(s);
    s = out ^ a;
    out = splitmix64(s);
    s = out ^ b;
    out = splitmix64(s);
    s = out ^ c;
    return splitmix64(s);
}

CMatrix ginibre(int k, Rng& rng) {
    CMatrix m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = rng.cgaussian();
    return m;
}

CMatrix haar_unitary(int k, Rng& rng) {
    CMatrix q = ginibre(k, rng);
    // Two-pass modified Gram-Schmidt on columns; positive normalization
    // coefficients keep the distribution Haar.
    for (int j = 0; j < k; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int i = 0; i < j; ++i) {
                Complex proj{};
                for (int row = 0; row < k; ++row) proj += std::conj(q(row, i)) * q(row, j);
                for (int row = 0; row < k; ++row) q(row, j) -= proj * q(row, i);
            }
        }
        double norm_sq = 0.0;
        for (int row = 0; row < k; ++row) norm_sq += std::norm(q(row, j));
        double norm = std::sqrt(norm_sq);
        while (norm < 1e-12) {  // essentially impossible; redraw the column
            for (int row = 0; row < k; ++row) q(row, j) = rng.cgaussian();
            for (int pass = 0; pass < 2; ++pass) {
                for (int i = 0; i < j; ++i) {
                    Complex proj{};
                    for (int row = 0; row < k; ++row) proj += std::conj(q(row, i)) * q(row, j);
                    for (int row = 0; row < k; ++row) q(row, j) -= proj * q(row, i);
                }
            }
            norm_sq = 0.0;
            for (int row = 0; row < k; ++row) norm_sq += std::norm(q(row, j));
            norm = std::sqrt(norm_sq);
        }
        for (int row = 0; row < k; ++row) q(row, j) = q(row, j) * (1.0 / norm);
    }
    return q;
}

ModuleVector random_module_vector(int k, int n, Rng& rng) {
    std::vector<CMatrix> entries;
    entries.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) entries.push_back(ginibre(k, rng));
    return ModuleVector(std::move(entries));
}

}  // namespace cstar
