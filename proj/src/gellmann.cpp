#include "entangle/gellmann.hpp"

#include <cmath>
#include <string>

#include "entangle/error.hpp"
#include "entangle/kernels.hpp"

namespace entangle {

namespace {

constexpr cplx kI{0.0, 1.0};

ComplexMatrix symmetric(std::size_t d, std::size_t j, std::size_t k) {
  ComplexMatrix m(d, d);
  m(j, k) = 1.0;
  m(k, j) = 1.0;
  return m;
}

ComplexMatrix antisymmetric(std::size_t d, std::size_t j, std::size_t k) {
  ComplexMatrix m(d, d);
  m(j, k) = -kI;
  m(k, j) = kI;
  return m;
}

// sqrt(2 / (l (l + 1))) diag(1, ..., 1, -l, 0, ..., 0) with l ones.
ComplexMatrix diagonal_generator(std::size_t d, std::size_t l) {
  ComplexMatrix m(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(l * (l + 1) / 2));
  for (std::size_t i = 0; i < l; ++i) m(i, i) = scale;
  m(l, l) = -scale * static_cast<double>(l);
  return m;
}

void require_generator_count(const BlochExpansion& e, std::size_t d) {
  const std::size_t n = d * d - 1;
  if (e.u.size() != n || e.v.size() != n || e.beta.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "expansion sizes do not match d = " + std::to_string(d));
  }
}

// Re Tr(A B) for Hermitian A, B equals Re sum_ij A_ij conj(B_ij).
double hermitian_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return kernels::dotc(a.entries(), b.entries()).real();
}

}  // namespace

GeneratorSet su_generators(std::size_t d) {
  if (d < 2) throw Error(ErrorKind::DimensionMismatch, "SU(d) generators need d >= 2");
  GeneratorSet set{d, {}};
  set.lambdas.reserve(d * d - 1);
  if (d == 3) {
    set.lambdas = {symmetric(3, 0, 1), antisymmetric(3, 0, 1), diagonal_generator(3, 1),
                   symmetric(3, 0, 2), antisymmetric(3, 0, 2), symmetric(3, 1, 2),
                   antisymmetric(3, 1, 2), diagonal_generator(3, 2)};
    return set;
  }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) set.lambdas.push_back(symmetric(d, j, k));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) set.lambdas.push_back(antisymmetric(d, j, k));
  for (std::size_t l = 1; l < d; ++l) set.lambdas.push_back(diagonal_generator(d, l));
  return set;
}

double bloch_prefactor(std::size_t d) noexcept {
  const double n = static_cast<double>(d);
  return std::sqrt(n / (2.0 * (n - 1.0)));
}

double expansion_prefactor(std::size_t d) noexcept {
  const double n = static_cast<double>(d);
  return std::sqrt(n * (n - 1.0) / 2.0);
}

double norm(const std::vector<double>& x) noexcept {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc);
}

BlochExpansion bloch_expansion(const PureBipartiteState& s) { return bloch_expansion(s, su_generators(s.dim())); }

BlochExpansion bloch_expansion(const PureBipartiteState& s, const GeneratorSet& generators) {
  const std::size_t d = s.dim();
  if (generators.dim != d) throw Error(ErrorKind::DimensionMismatch, "generator set has the wrong dimension");
  const std::size_t n = generators.size();
  const double c = bloch_prefactor(d);
  const auto rho_a = reduced_density(s, Side::A);
  const auto rho_b = reduced_density(s, Side::B);

  BlochExpansion e{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    e.u[i] = c * hermitian_trace_product(rho_a.matrix(), generators[i]);
    e.v[i] = c * hermitian_trace_product(rho_b.matrix(), generators[i]);
  }

  // <psi| A (x) B |psi> = sum_ij conj(alpha_ij) (A alpha B^T)_ij
  //                     = dotc(A alpha, alpha conj(B)).
  // beta_ij = (d / (d - 1)) <psi| lambda_i (x) lambda_j |psi>.
  const ComplexMatrix& alpha = s.alpha();
  std::vector<ComplexMatrix> left, right;
  left.reserve(n);
  right.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(generators[i] * alpha);
    right.push_back(alpha * generators[i].conjugate());
  }
  const double beta_scale = static_cast<double>(d) / static_cast<double>(d - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e.beta[i * n + j] = beta_scale * kernels::dotc(left[i].entries(), right[j].entries()).real();
  return e;
}

ComplexMatrix reconstruct_density(const BlochExpansion& e, std::size_t d) {
  require_generator_count(e, d);
  const auto gens = su_generators(d);
  const std::size_t n = gens.size();
  const double a = expansion_prefactor(d);
  const ComplexMatrix one = ComplexMatrix::identity(d);

  ComplexMatrix u_dot(d, d), v_dot(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    u_dot += e.u[i] * gens[i];
    v_dot += e.v[i] * gens[i];
  }
  ComplexMatrix rho = ComplexMatrix::identity(d * d);
  rho += a * kron(u_dot, one);
  rho += a * kron(one, v_dot);
  // sum_ij beta_ij lambda_i (x) lambda_j = sum_i lambda_i (x) (sum_j beta_ij lambda_j)
  for (std::size_t i = 0; i < n; ++i) {
    ComplexMatrix row(d, d);
    for (std::size_t j = 0; j < n; ++j) row += e.beta_at(i, j) * gens[j];
    rho += (0.5 * a * a) * kron(gens[i], row);
  }
  rho *= 1.0 / static_cast<double>(d * d);
  return rho;
}

ComplexMatrix reduced_from_bloch(const std::vector<double>& u, std::size_t d) {
  const auto gens = su_generators(d);
  if (u.size() != gens.size()) throw Error(ErrorKind::DimensionMismatch, "Bloch vector has the wrong length");
  ComplexMatrix rho = ComplexMatrix::identity(d);
  const double a = expansion_prefactor(d);
  for (std::size_t i = 0; i < gens.size(); ++i) rho += (a * u[i]) * gens[i];
  rho *= 1.0 / static_cast<double>(d);
  return rho;
}

}  // namespace entangle
