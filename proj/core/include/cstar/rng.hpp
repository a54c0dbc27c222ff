#pragma once

#include <cstdint>

#include "cstar/module_space.hpp"

namespace cstar {

// Deterministic, splittable random source. xoshiro256** seeded through a
// splitmix64 chain; Gaussians by Box-Muller. The whole stream is a pure
// function of the 64-bit seed, independent of platform RNG facilities, so
// scan rows are reproducible individually.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    double uniform01();  // in (0, 1]
    double gaussian();   // standard normal
    Complex cgaussian(); // independent standard normal real/imag parts
    int uniform_int(int n);  // in [0, n)

  private:
    std::uint64_t state_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Stream derivation for (seed, k, n, trial) and similar tuples.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c);

// k x k matrix with i.i.d. standard complex Gaussian entries.
CMatrix ginibre(int k, Rng& rng);

// Haar-distributed unitary: Gram-Schmidt of a Ginibre matrix with positive
// diagonal normalization.
CMatrix haar_unitary(int k, Rng& rng);

// n-tuple of k x k Ginibre matrices.
ModuleVector random_module_vector(int k, int n, Rng& rng);

}  // namespace cstar
