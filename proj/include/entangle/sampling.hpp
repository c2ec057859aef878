#pragma once

#include <array>
#include <cstdint>

#include "entangle/linalg.hpp"
#include "entangle/states.hpp"

namespace entangle {

/// xoshiro256** seeded through splitmix64. Not thread-safe; give each thread
/// its own sampler with a distinct seed (see derive_seed).
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t position() const noexcept { return position_; }

  std::uint64_t next_u64() noexcept;
  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  // Real and imaginary parts independent N(0, 1), by Box-Muller.
  cplx complex_gaussian() noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::array<std::uint64_t, 4> s_;
};

std::uint64_t splitmix64(std::uint64_t& state) noexcept;
// Seed for the index-th independent stream under a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

ComplexMatrix random_ginibre(SeededSampler& rng, std::size_t rows, std::size_t cols);

/// Normalized d x d complex Gaussian amplitudes: Haar-distributed pure state.
PureBipartiteState random_pure_state(SeededSampler& rng, std::size_t d);

/// Haar unitary: Q of a Ginibre QR with R's diagonal phases moved into Q.
ComplexMatrix random_unitary(SeededSampler& rng, std::size_t d);

/// |a> (x) |b> with independent Haar-random local kets.
PureBipartiteState random_product_state(SeededSampler& rng, std::size_t d);

/// Random Schmidt coefficients with exactly `rank` nonzero entries (rank <= d).
SchmidtSpectrum random_schmidt_spectrum(SeededSampler& rng, std::size_t d, std::size_t rank);

/// UA diag(kappa) UB^T with Haar UA, UB: a state with the given spectrum in a
/// random local basis.
PureBipartiteState random_state_with_spectrum(SeededSampler& rng, const SchmidtSpectrum& kappa);

/// Brute-force concurrence at d = 3: loops over every row pair i < k and
/// column pair j < l. Shares no code with concurrence_minors.
double oracle_concurrence_minors(const PureBipartiteState& s);

}  // namespace entangle
