#pragma once

// Hermitian traceless generators of SU(d) and the generator expansion of a
// pure two-party density operator
//
//   rho_AB = (1/d^2) (1 (x) 1 + a u.lambda (x) 1 + a 1 (x) v.lambda
//                     + (a^2 / 2) sum_ij beta_ij lambda_i (x) lambda_j),
//
// with a = sqrt(d (d - 1) / 2). For d = 3 this is a = sqrt(3), a^2/2 = 3/2,
// and u_i = (sqrt(3)/2) Tr(rho_A lambda_i). The normalization is fixed so that
// a pure product state has |u| = |v| = 1 at every d.

#include <cstddef>
#include <vector>

#include "entangle/linalg.hpp"
#include "entangle/states.hpp"

namespace entangle {

struct GeneratorSet {
  std::size_t dim;
  // d^2 - 1 matrices. For d = 3 in the usual Gell-Mann order lambda_1..lambda_8;
  // otherwise symmetric pairs, antisymmetric pairs, then diagonals.
  std::vector<ComplexMatrix> lambdas;

  std::size_t size() const noexcept { return lambdas.size(); }
  const ComplexMatrix& operator[](std::size_t i) const { return lambdas[i]; }
};

GeneratorSet su_generators(std::size_t d);

struct BlochExpansion {
  std::vector<double> u;
  std::vector<double> v;
  // Row-major (d^2 - 1) x (d^2 - 1).
  std::vector<double> beta;

  std::size_t generator_count() const noexcept { return u.size(); }
  double beta_at(std::size_t i, std::size_t j) const { return beta[i * u.size() + j]; }
};

// u_i = c_d Tr(rho_A lambda_i), c_d = sqrt(d / (2 (d - 1))).
double bloch_prefactor(std::size_t d) noexcept;
// a = sqrt(d (d - 1) / 2), the coefficient of u.lambda (x) 1.
double expansion_prefactor(std::size_t d) noexcept;

double norm(const std::vector<double>& x) noexcept;

BlochExpansion bloch_expansion(const PureBipartiteState& s);
BlochExpansion bloch_expansion(const PureBipartiteState& s, const GeneratorSet& generators);

/// Rebuilds the d^2 x d^2 operator from its expansion.
ComplexMatrix reconstruct_density(const BlochExpansion& e, std::size_t d);

/// (1/d) (1 + a u.lambda).
ComplexMatrix reduced_from_bloch(const std::vector<double>& u, std::size_t d);

}  // namespace entangle
