#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "entangle/error.hpp"
#include "entangle/measures.hpp"
#include "entangle/sampling.hpp"
#include "entangle/states.hpp"
#include "test_support.hpp"

using namespace entangle;
using namespace entangle::testing;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an entangle::Error");
  return ErrorKind::InvalidFormat;
}

ComplexMatrix permutation(std::size_t d, std::vector<std::size_t> image) {
  ComplexMatrix p(d, d);
  for (std::size_t j = 0; j < d; ++j) p(image[j], j) = 1.0;
  return p;
}

}  // namespace

TEST_CASE("make_state accepts valid amplitudes") {
  const auto max = maximally_entangled3();
  CHECK(max.dim() == 3);
  CHECK(std::abs(max.alpha()(1, 1) - 1 / kSqrt3) < 1e-15);

  const auto product = basis_state(3, 0, 0);
  CHECK(product.alpha()(0, 0) == cplx(1.0));

  ComplexMatrix scaled = maximally_entangled3().alpha();
  scaled *= 0.999999;
  const auto renormalized = make_state(3, scaled);
  CHECK(std::abs(frobenius_norm_sq(renormalized.alpha()) - 1.0) < 1e-15);
}

TEST_CASE("make_state rejects invalid amplitudes") {
  CHECK(kind_of([] { make_state(3, ComplexMatrix(3, 3)); }) == ErrorKind::ZeroState);
  CHECK(kind_of([] { make_state(3, ComplexMatrix(2, 2)); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { make_state(3, ComplexMatrix(3, 2)); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { make_state(1, ComplexMatrix(1, 1)); }) == ErrorKind::DimensionMismatch);

  ComplexMatrix half = singlet3().alpha();
  half *= 0.5;
  CHECK(kind_of([&] { make_state(3, half); }) == ErrorKind::NotNormalized);

  ComplexMatrix slightly_off = singlet3().alpha();
  slightly_off *= 1.0 + 2e-6;
  CHECK(kind_of([&] { make_state(3, slightly_off); }) == ErrorKind::NotNormalized);
}

TEST_CASE("reduced_density examples") {
  const auto third = ComplexMatrix::identity(3);
  for (Side side : {Side::A, Side::B}) {
    CHECK(max_abs_diff(reduced_density(maximally_entangled3(), side).matrix(), (1.0 / 3.0) * third) < 1e-15);

    ComplexMatrix projector(3, 3);
    projector(0, 0) = 1.0;
    CHECK(max_abs_diff(reduced_density(basis_state(3, 0, 0), side).matrix(), projector) == 0.0);

    const double diag[] = {0.5, 0.5, 0.0};
    CHECK(max_abs_diff(reduced_density(singlet3(), side).matrix(),
                       ComplexMatrix::diagonal(std::span<const double>(diag))) < 1e-15);
  }
}

TEST_CASE("reduced_density picks the correct subsystem") {
  // |1, 2>: subsystem A is in |1>, B in |2>.
  const auto s = basis_state(3, 0, 1);
  CHECK(reduced_density(s, Side::A).matrix()(0, 0) == cplx(1.0));
  CHECK(reduced_density(s, Side::B).matrix()(1, 1) == cplx(1.0));
}

TEST_CASE("reduced_density equals the explicit partial trace") {
  SeededSampler rng(30);
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto s = random_pure_state(rng, d);
    const auto psi = outer(s.ket());
    ComplexMatrix rho_a(d, d), rho_b(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < d; ++j) {
          rho_a(i, k) += psi(i * d + j, k * d + j);
          rho_b(i, k) += psi(j * d + i, j * d + k);
        }
    CHECK(max_abs_diff(reduced_density(s, Side::A).matrix(), rho_a) < 1e-15);
    CHECK(max_abs_diff(reduced_density(s, Side::B).matrix(), rho_b) < 1e-15);
  }
}

TEST_CASE("schmidt_spectrum examples") {
  CHECK(max_abs_diff(schmidt_spectrum(maximally_entangled3()).kappa, {1 / kSqrt3, 1 / kSqrt3, 1 / kSqrt3}) < 1e-15);
  CHECK(max_abs_diff(schmidt_spectrum(basis_state(3, 2, 1)).kappa, {1, 0, 0}) == 0.0);
  CHECK(max_abs_diff(schmidt_spectrum(singlet3()).kappa, {1 / kSqrt2, 1 / kSqrt2, 0}) < 1e-12);
}

TEST_CASE("fu_family_state and epsilon_state") {
  CHECK(max_abs_diff(fu_family_state(1, 1, 1).alpha(), maximally_entangled3().alpha()) < 1e-15);
  CHECK(max_abs_diff(fu_family_state(kSqrt3, 0, 0).alpha(), basis_state(3, 0, 0).alpha()) < 1e-15);
  const double r = std::sqrt(1.5);
  CHECK(max_abs_diff(fu_family_state(r, r, 0).alpha(), singlet3().alpha()) < 1e-15);
  CHECK(kind_of([] { fu_family_state(1, 1, 0); }) == ErrorKind::ConstraintViolation);

  CHECK(max_abs_diff(epsilon_state(0.0).alpha(), basis_state(3, 2, 2).alpha()) < 1e-15);
  CHECK(max_abs_diff(epsilon_state(2.0 / 3.0).alpha(), maximally_entangled3().alpha()) < 1e-15);
  CHECK(max_abs_diff(epsilon_state(1.0).alpha(), singlet3().alpha()) < 1e-15);
  CHECK(kind_of([] { epsilon_state(-0.01); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { epsilon_state(1.01); }) == ErrorKind::OutOfRange);
}

TEST_CASE("apply_local_unitary") {
  const auto s = singlet3();
  const auto id = ComplexMatrix::identity(3);
  CHECK(apply_local_unitary(s, id, id).alpha() == s.alpha());

  // Basis permutations move the support of the singlet around without
  // changing its concurrence.
  const auto cycle = permutation(3, {1, 2, 0});
  const auto swap = permutation(3, {2, 1, 0});
  const auto permuted = apply_local_unitary(s, cycle, swap);
  CHECK(permuted.alpha()(1, 2) != cplx(0.0));
  CHECK(oracle_concurrence_minors(permuted) == doctest::Approx(kSqrt3 / 2).epsilon(1e-15));

  ComplexMatrix not_unitary = id;
  not_unitary(0, 0) = 1.1;
  CHECK(kind_of([&] { apply_local_unitary(s, not_unitary, id); }) == ErrorKind::NotUnitary);
  CHECK(kind_of([&] { apply_local_unitary(s, ComplexMatrix::identity(2), id); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("apply_local_unitary matches (UA kron UB) acting on the ket") {
  SeededSampler rng(31);
  const auto s = random_pure_state(rng, 3);
  const auto ua = random_unitary(rng, 3);
  const auto ub = random_unitary(rng, 3);
  const ComplexMatrix ket(9, 1, std::vector<cplx>(s.ket().begin(), s.ket().end()));
  const auto expected = kron(ua, ub) * ket;
  const auto got = apply_local_unitary(s, ua, ub);
  CHECK(max_abs_diff(ComplexMatrix(9, 1, std::vector<cplx>(got.ket().begin(), got.ket().end())), expected) < 1e-14);
}

TEST_CASE("state invariants over random states") {
  SeededSampler rng(32);
  for (std::size_t d : {2u, 3u, 4u, 6u}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto s = random_pure_state(rng, d);
      const auto rho_a = reduced_density(s, Side::A);
      const auto rho_b = reduced_density(s, Side::B);
      CAPTURE(d);
      CHECK(max_abs_diff(rho_a.spectrum(), rho_b.spectrum()) < 1e-10);
      CHECK(std::abs(rho_a.matrix().trace() - 1.0) < 1e-12);

      const auto kappa = schmidt_spectrum(s);
      double sum_sq = 0.0;
      for (double k : kappa.kappa) sum_sq += k * k;
      CHECK(std::abs(sum_sq - 1.0) < 1e-10);
      CHECK(std::is_sorted(kappa.kappa.rbegin(), kappa.kappa.rend()));

      const auto rotated = apply_local_unitary(s, random_unitary(rng, d), random_unitary(rng, d));
      CHECK(max_abs_diff(schmidt_spectrum(rotated).kappa, kappa.kappa) < 1e-10);
    }
  }
}

TEST_CASE("standard-basis product states have det 0 and a trivial spectrum") {
  for (std::size_t d : {2u, 3u, 5u}) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const auto s = basis_state(d, i, j);
        CHECK(determinant(s.alpha()) == cplx(0.0));
        std::vector<double> expected(d, 0.0);
        expected[0] = 1.0;
        CHECK(schmidt_spectrum(s).kappa == expected);
      }
    }
  }
}

TEST_CASE("DensityMatrix validation") {
  CHECK(kind_of([] { DensityMatrix(ComplexMatrix::identity(2)); }) == ErrorKind::NotNormalized);
  const ComplexMatrix negative{{1.5, 0.0}, {0.0, -0.5}};
  CHECK(kind_of([&] { DensityMatrix{negative}; }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { DensityMatrix(ComplexMatrix(2, 3)); }) == ErrorKind::NotSquare);
}

TEST_CASE("make_schmidt_spectrum validates and sorts") {
  const auto k = make_schmidt_spectrum({0.6, 0.8});
  CHECK(k.kappa == std::vector<double>{0.8, 0.6});
  CHECK(kind_of([] { make_schmidt_spectrum({0.6, 0.6}); }) == ErrorKind::ConstraintViolation);
  CHECK(kind_of([] { make_schmidt_spectrum({1.0}); }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([] { make_schmidt_spectrum({-0.6, 0.8}); }) == ErrorKind::ConstraintViolation);
}
