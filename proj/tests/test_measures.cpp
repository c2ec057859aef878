#include "doctest.h"

#include <cmath>
#include <functional>

#include "entangle/error.hpp"
#include "entangle/gellmann.hpp"
#include "entangle/measures.hpp"
#include "entangle/sampling.hpp"
#include "test_support.hpp"

using namespace entangle;
using namespace entangle::testing;

namespace {

// Reference values evaluated at 30 digits.
constexpr double kH14 = 0.811278124459132863909695792039;          // h(1/4)
constexpr double kEofInvSqrt2 = 0.60087603669285610084202704386;   // eof_2x2(1/sqrt 2)
constexpr double kRank2Half = 0.442289925413491367721013652693;    // rank-2 qutrit EOF at C = 1/2
constexpr double kSqrt11Over12 = 0.95742710775633810997510191137;
constexpr double kLog2Of3 = 1.58496250072115618145373894395;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an entangle::Error");
  return ErrorKind::InvalidFormat;
}

PureBipartiteState bell() { return diagonal_state({1 / kSqrt2, 1 / kSqrt2}); }

std::vector<double> report_fields(const MeasureReport& r) {
  std::vector<double> out{r.c_schmidt, r.det_alpha_sq, r.entropy_bits};
  for (const auto& o : {r.c_minors, r.c_bloch, r.c_2x2, r.eof_closed_form, r.p_e}) out.push_back(o.value_or(-1.0));
  return out;
}

}  // namespace

TEST_CASE("concurrence_minors examples") {
  CHECK(concurrence_minors(maximally_entangled3()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(concurrence_minors(basis_state(3, 0, 0)) == 0.0);
  CHECK(concurrence_minors(singlet3()) == doctest::Approx(kSqrt3 / 2).epsilon(1e-15));
  const auto s = diagonal_state({std::sqrt(0.5), std::sqrt(1.0 / 3.0), std::sqrt(1.0 / 6.0)});
  CHECK(std::abs(concurrence_minors(s) - kSqrt11Over12) < 1e-15);
  CHECK(kind_of([] { concurrence_minors(bell()); }) == ErrorKind::WrongDimension);
}

TEST_CASE("concurrence_minors sees off-diagonal support") {
  // alpha_12 and alpha_21 only: the single minor alpha11 alpha22 - alpha12 alpha21.
  const ComplexMatrix a{{0, 1 / kSqrt2, 0}, {1 / kSqrt2, 0, 0}, {0, 0, 0}};
  CHECK(concurrence_minors(make_state(3, a)) == doctest::Approx(kSqrt3 / 2).epsilon(1e-15));
}

TEST_CASE("concurrence_schmidt examples") {
  const double t = 1 / kSqrt3;
  CHECK(concurrence_schmidt(make_schmidt_spectrum({t, t, t}), 3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(concurrence_schmidt(make_schmidt_spectrum({1, 0, 0}), 3) == 0.0);
  CHECK(concurrence_schmidt(make_schmidt_spectrum({1 / kSqrt2, 1 / kSqrt2, 0}), 3) ==
        doctest::Approx(kSqrt3 / 2).epsilon(1e-15));
  CHECK(concurrence_schmidt(make_schmidt_spectrum({1 / kSqrt2, 1 / kSqrt2}), 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(kind_of([] { concurrence_schmidt(make_schmidt_spectrum({1 / kSqrt2, 1 / kSqrt2}), 3); }) ==
        ErrorKind::LengthMismatch);
}

TEST_CASE("concurrence_bloch examples") {
  CHECK(concurrence_bloch(basis_state(3, 1, 2)) < 1e-7);
  CHECK(concurrence_bloch(maximally_entangled3()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(concurrence_bloch(singlet3()) - concurrence_minors(singlet3())) < 1e-12);
  CHECK(concurrence_bloch(bell()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(kind_of([] { concurrence_bloch(basis_state(4, 0, 0)); }) == ErrorKind::WrongDimension);
}

TEST_CASE("concurrence_2x2 examples") {
  CHECK(concurrence_2x2(bell()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(concurrence_2x2(basis_state(2, 0, 0)) == 0.0);
  const ComplexMatrix a{{1 / kSqrt2, 0.5}, {0, 0.5}};
  CHECK(std::abs(concurrence_2x2(make_state(2, a)) - 1 / kSqrt2) < 1e-15);
  CHECK(kind_of([] { concurrence_2x2(singlet3()); }) == ErrorKind::WrongDimension);
}

TEST_CASE("von_neumann_entropy examples") {
  CHECK(std::abs(von_neumann_entropy(reduced_density(maximally_entangled3(), Side::A)) - kLog2Of3) < 1e-14);
  CHECK(von_neumann_entropy(reduced_density(basis_state(3, 0, 0), Side::A)) == 0.0);
  CHECK(von_neumann_entropy(reduced_density(singlet3(), Side::B)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("binary_entropy examples") {
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(std::abs(binary_entropy(0.25) - kH14) < 1e-15);
  CHECK(kind_of([] { binary_entropy(-1e-3); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { binary_entropy(1.001); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { binary_entropy(std::nan("")); }) == ErrorKind::OutOfRange);
}

TEST_CASE("eof_2x2 examples") {
  CHECK(eof_2x2(0.0) == 0.0);
  CHECK(eof_2x2(1.0) == 1.0);
  CHECK(std::abs(eof_2x2(1 / kSqrt2) - kEofInvSqrt2) < 1e-14);
  CHECK(kind_of([] { eof_2x2(1.1); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { eof_2x2(-0.1); }) == ErrorKind::OutOfRange);
}

TEST_CASE("eof_qutrit_rank2 examples") {
  CHECK(eof_qutrit_rank2(0.0) == 0.0);
  CHECK(eof_qutrit_rank2(kSqrt3 / 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(eof_qutrit_rank2(0.5) - kRank2Half) < 1e-14);
  CHECK(std::abs(eof_qutrit_rank2(0.5) - 0.44) < 5e-3);
  CHECK_NOTHROW(eof_qutrit_rank2(kSqrt3 / 2 + 5e-13));
  CHECK(kind_of([] { eof_qutrit_rank2(kSqrt3 / 2 + 1e-9); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { eof_qutrit_rank2(-0.1); }) == ErrorKind::OutOfRange);
}

TEST_CASE("p_e and concurrence_family examples") {
  const double r = std::sqrt(1.5);
  CHECK(p_e(1, 1, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p_e(r, r, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p_e(kSqrt3, 0, 0) == 0.0);
  CHECK(p_e(-1, 1, -1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(concurrence_family(1, 1, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(concurrence_family(r, r, 0) == doctest::Approx(kSqrt3 / 2).epsilon(1e-15));
  CHECK(concurrence_family(kSqrt3, 0, 0) == 0.0);
  CHECK(kind_of([] { p_e(1, 1, 0); }) == ErrorKind::ConstraintViolation);
  CHECK(kind_of([] { concurrence_family(1, 1, 0); }) == ErrorKind::ConstraintViolation);
}

TEST_CASE("full_report examples") {
  const auto max = full_report(maximally_entangled3());
  CHECK(max.d == 3);
  CHECK(*max.c_minors == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max.c_schmidt == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*max.c_bloch == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(max.c_2x2);
  CHECK(std::abs(max.entropy_bits - kLog2Of3) < 1e-12);
  CHECK(std::abs(max.det_alpha_sq - 1.0 / 27.0) < 1e-15);
  CHECK(max.max_route_residual < 1e-10);
  CHECK(*max.p_e == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(max.eof_closed_form);

  const auto product = full_report(basis_state(3, 0, 0));
  CHECK(*product.c_minors == 0.0);
  CHECK(product.c_schmidt == 0.0);
  // 1 - |u|^2 cancels to rounding level, so this route only reaches sqrt(eps).
  CHECK(*product.c_bloch < 1e-7);
  CHECK(product.entropy_bits == 0.0);
  CHECK(product.det_alpha_sq == 0.0);
  CHECK(*product.eof_closed_form == 0.0);

  const auto singlet = full_report(singlet3());
  CHECK(*singlet.eof_closed_form == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*singlet.p_e == doctest::Approx(0.5).epsilon(1e-12));

  const auto qubits = full_report(bell());
  CHECK(*qubits.c_2x2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(*qubits.eof_closed_form == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(qubits.c_minors);
  CHECK_FALSE(qubits.p_e);

  const auto four = full_report(basis_state(4, 1, 1));
  CHECK_FALSE(four.c_bloch);
  CHECK_FALSE(four.eof_closed_form);

  SeededSampler rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = full_report(random_pure_state(rng, 3));
    CHECK(r.max_route_residual < 1e-10);
    CHECK_FALSE(r.p_e);
  }
}

TEST_CASE("concurrence dominates P_E on the family") {
  for (int k = 0; k <= 1000; ++k) {
    const auto c = epsilon_coefficients(k / 1000.0);
    CHECK(concurrence_family(c.a1, c.a2, c.a3) >= p_e(c.a1, c.a2, c.a3));
  }
}

TEST_CASE("family concurrence agrees with the minors route") {
  for (int k = 0; k <= 100; ++k) {
    const double eps = k / 100.0;
    const auto c = epsilon_coefficients(eps);
    CHECK(std::abs(concurrence_family(c.a1, c.a2, c.a3) - concurrence_minors(epsilon_state(eps))) < 1e-12);
  }
}

TEST_CASE("closed-form EOF is monotone on its domain") {
  double prev2 = -1.0, prev3 = -1.0;
  for (int k = 0; k <= 1000; ++k) {
    const double e2 = eof_2x2(k / 1000.0);
    const double e3 = eof_qutrit_rank2(std::min(k / 1000.0 * kSqrt3 / 2, kSqrt3 / 2));
    CHECK(e2 >= prev2);
    CHECK(e3 >= prev3);
    prev2 = e2;
    prev3 = e3;
  }
}

TEST_CASE("rank-2 closed form equals the entropy") {
  SeededSampler rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_state_with_spectrum(rng, random_schmidt_spectrum(rng, 3, 2));
    const double c = concurrence_minors(s);
    CHECK(std::abs(eof_qutrit_rank2(std::min(c, kSqrt3 / 2)) - von_neumann_entropy(reduced_density(s, Side::A))) <
          1e-9);
  }
}

TEST_CASE("qudit formula reduces to the two- and three-level forms") {
  SeededSampler rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const auto k2 = random_schmidt_spectrum(rng, 2, 2);
    CHECK(std::abs(concurrence_schmidt(k2, 2) - 2 * k2.kappa[0] * k2.kappa[1]) < 1e-12);

    const auto k3 = random_schmidt_spectrum(rng, 3, 3);
    const auto& k = k3.kappa;
    const double three = std::sqrt(3 * (k[0] * k[0] * k[1] * k[1] + k[0] * k[0] * k[2] * k[2] +
                                        k[1] * k[1] * k[2] * k[2]));
    CHECK(std::abs(concurrence_schmidt(k3, 3) - three) < 1e-12);
  }
}

TEST_CASE("flat spectra give unit concurrence at every d") {
  for (std::size_t d = 2; d <= 9; ++d) {
    const std::vector<double> kappa(d, 1 / std::sqrt(static_cast<double>(d)));
    CHECK(concurrence_schmidt(make_schmidt_spectrum(kappa), d) == doctest::Approx(1.0).epsilon(1e-12));
    const auto r = full_report(diagonal_state(kappa));
    CHECK(r.c_schmidt == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.entropy_bits == doctest::Approx(std::log2(static_cast<double>(d))).epsilon(1e-12));
  }
  // A non-flat spectrum stays strictly below 1.
  CHECK(concurrence_schmidt(make_schmidt_spectrum({0.6, 0.8}), 2) < 1.0 - 1e-3);
}

TEST_CASE("report is invariant under local unitaries") {
  SeededSampler rng(54);
  for (std::size_t d : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto s = random_pure_state(rng, d);
      const auto t = apply_local_unitary(s, random_unitary(rng, d), random_unitary(rng, d));
      CHECK(max_abs_diff(report_fields(full_report(s)), report_fields(full_report(t))) < 1e-9);
    }
  }
}

TEST_CASE("report fields stay in range") {
  SeededSampler rng(55);
  for (std::size_t d : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto r = full_report(random_pure_state(rng, d));
      for (double c : {r.c_schmidt, r.c_minors.value_or(0), r.c_bloch.value_or(0), r.c_2x2.value_or(0)}) {
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
      }
      CHECK(r.entropy_bits >= 0.0);
      CHECK(r.entropy_bits <= std::log2(static_cast<double>(d)) + 1e-9);
    }
  }
}
