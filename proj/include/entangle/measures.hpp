#pragma once

#include <cstddef>
#include <optional>

#include "entangle/states.hpp"

namespace entangle {

/// Everything computed for one state. Optional fields are absent where the
/// corresponding formula does not apply to the state's dimension or class.
struct MeasureReport {
  std::size_t d = 0;
  std::optional<double> c_minors;  // d = 3, from the nine 2x2 minors of alpha
  double c_schmidt = 0.0;          // any d, from the Schmidt coefficients
  std::optional<double> c_bloch;   // d in {2, 3}, sqrt(1 - |u|^2)
  std::optional<double> c_2x2;     // d = 2, 2 |alpha11 alpha22 - alpha12 alpha21|
  double det_alpha_sq = 0.0;
  double entropy_bits = 0.0;
  std::optional<double> eof_closed_form;  // d = 2, or d = 3 with kappa_3 = 0
  std::optional<double> p_e;              // diagonal real d = 3 states only
  double max_route_residual = 0.0;

  // Minors route at d = 3, the 2x2 formula at d = 2, Schmidt route otherwise.
  double concurrence() const noexcept;
};

double concurrence_minors(const PureBipartiteState& s);
double concurrence_schmidt(const SchmidtSpectrum& kappa, std::size_t d);
double concurrence_bloch(const PureBipartiteState& s);
double concurrence_2x2(const PureBipartiteState& s);

/// -sum p log2 p over the clamped spectrum, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);
double entropy_bits(std::span<const double> probabilities) noexcept;

double binary_entropy(double x);

/// h((1 + sqrt(1 - c^2)) / 2) for two qubits.
double eof_2x2(double c);
/// h((1 + sqrt(1 - 4 c^2 / 3)) / 2) for qutrit states with one vanishing
/// Schmidt coefficient. Does not check that the state is in that class.
double eof_qutrit_rank2(double c);

double p_e(double a1, double a2, double a3);
double concurrence_family(double a1, double a2, double a3);

MeasureReport full_report(const PureBipartiteState& s);

}  // namespace entangle
