#include "entangle/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "entangle/error.hpp"

namespace entangle {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  std::uint64_t state = base ^ (0xd1b54a32d192ed03ULL * (index + 1));
  return splitmix64(state);
}

SeededSampler::SeededSampler(std::uint64_t seed) noexcept : seed_(seed) {
  std::uint64_t state = seed;
  for (auto& word : s_) word = splitmix64(state);
}

std::uint64_t SeededSampler::next_u64() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  ++position_;
  return result;
}

double SeededSampler::uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

cplx SeededSampler::complex_gaussian() noexcept {
  // 1 - U lies in (0, 1], so the logarithm is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

ComplexMatrix random_ginibre(SeededSampler& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix g(rows, cols);
  for (auto& z : g.entries()) z = rng.complex_gaussian();
  return g;
}

PureBipartiteState random_pure_state(SeededSampler& rng, std::size_t d) {
  if (d < 2) throw Error(ErrorKind::DimensionMismatch, "local dimension must be at least 2");
  ComplexMatrix alpha = random_ginibre(rng, d, d);
  alpha *= 1.0 / std::sqrt(frobenius_norm_sq(alpha));
  return make_state(d, std::move(alpha));
}

ComplexMatrix random_unitary(SeededSampler& rng, std::size_t d) {
  if (d < 2) throw Error(ErrorKind::DimensionMismatch, "unitary dimension must be at least 2");
  auto [q, r] = qr_decompose(random_ginibre(rng, d, d));
  // Q diag(r_jj / |r_jj|) is the factor with a positive R diagonal, which is
  // what makes the distribution Haar rather than merely unitary.
  for (std::size_t j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    const cplx phase = mag > 0.0 ? r(j, j) / mag : cplx(1.0);
    for (std::size_t i = 0; i < d; ++i) q(i, j) *= phase;
  }
  return q;
}

PureBipartiteState random_product_state(SeededSampler& rng, std::size_t d) {
  const ComplexMatrix a = random_ginibre(rng, d, 1);
  const ComplexMatrix b = random_ginibre(rng, 1, d);
  ComplexMatrix alpha = a * b;
  alpha *= 1.0 / std::sqrt(frobenius_norm_sq(alpha));
  return make_state(d, std::move(alpha));
}

SchmidtSpectrum random_schmidt_spectrum(SeededSampler& rng, std::size_t d, std::size_t rank) {
  if (rank < 1 || rank > d) throw Error(ErrorKind::OutOfRange, "rank must lie in [1, d]");
  // Squared moduli of Gaussian entries, normalized: uniform on the simplex
  // of the first `rank` probabilities.
  std::vector<double> w(d, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < rank; ++i) {
    w[i] = std::norm(rng.complex_gaussian());
    total += w[i];
  }
  std::vector<double> kappa(d);
  std::transform(w.begin(), w.end(), kappa.begin(), [total](double x) { return std::sqrt(x / total); });
  return make_schmidt_spectrum(std::move(kappa));
}

PureBipartiteState random_state_with_spectrum(SeededSampler& rng, const SchmidtSpectrum& kappa) {
  const std::size_t d = kappa.dim();
  const ComplexMatrix ua = random_unitary(rng, d);
  const ComplexMatrix ub = random_unitary(rng, d);
  return make_state(d, ua * ComplexMatrix::diagonal(std::span<const double>(kappa.kappa)) * ub.transpose());
}

double oracle_concurrence_minors(const PureBipartiteState& s) {
  if (s.dim() != 3) {
    throw Error(ErrorKind::WrongDimension, "oracle_concurrence_minors is defined for d = 3, got d = " +
                                               std::to_string(s.dim()));
  }
  const auto& a = s.alpha();
  double sum = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = i + 1; k < 3; ++k)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t l = j + 1; l < 3; ++l) {
          const cplx minor = a(i, j) * a(k, l) - a(i, l) * a(k, j);
          sum += minor.real() * minor.real() + minor.imag() * minor.imag();
        }
  return std::min(1.0, std::sqrt(3.0 * sum));
}

}  // namespace entangle
