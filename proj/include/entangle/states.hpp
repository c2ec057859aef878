#pragma once

#include <cstddef>
#include <vector>

#include "entangle/linalg.hpp"

namespace entangle {

inline constexpr double kNormTolerance = 1e-9;
// Inputs whose 2-norm is within this distance of 1 are renormalized.
inline constexpr double kRenormalizeTolerance = 1e-6;
inline constexpr double kEigenClampTolerance = 1e-9;

enum class Side { A, B };

/// |psi> = sum_ij alpha_ij |i, j> for two subsystems of equal dimension d.
/// Always unit norm.
class PureBipartiteState {
 public:
  std::size_t dim() const noexcept { return alpha_.rows(); }
  const ComplexMatrix& alpha() const noexcept { return alpha_; }
  // Amplitudes flattened in |i, j> order (row-major alpha).
  std::span<const cplx> ket() const noexcept { return alpha_.entries(); }

 private:
  explicit PureBipartiteState(ComplexMatrix alpha) : alpha_(std::move(alpha)) {}
  friend PureBipartiteState make_state(std::size_t d, ComplexMatrix alpha);

  ComplexMatrix alpha_;
};

/// Validates shape and norm. A zero matrix is rejected; a norm within 1e-6 of
/// one is rescaled to exactly one; anything further off throws NotNormalized.
PureBipartiteState make_state(std::size_t d, ComplexMatrix alpha);

/// Hermitian, unit-trace, positive semidefinite d x d matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix rho);

  std::size_t dim() const noexcept { return rho_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return rho_; }

  // Eigenvalues clamped to [0, 1], ascending.
  std::vector<double> spectrum() const;

 private:
  ComplexMatrix rho_;
};

/// Schmidt coefficients kappa_1 >= ... >= kappa_d >= 0, sum of squares one.
struct SchmidtSpectrum {
  std::vector<double> kappa;

  std::size_t dim() const noexcept { return kappa.size(); }
  std::vector<double> squares() const;
};

// Throws LengthMismatch/ConstraintViolation if kappa is not a valid spectrum.
SchmidtSpectrum make_schmidt_spectrum(std::vector<double> kappa);

// Clamp eigenvalues of a density matrix into [0, 1]. Negatives below
// -kEigenClampTolerance are left alone so the caller's validation sees them.
std::vector<double> clamp_probabilities(std::vector<double> eigenvalues);

/// Side A: alpha alpha^dagger. Side B: alpha^dagger alpha.
DensityMatrix reduced_density(const PureBipartiteState& s, Side side);

SchmidtSpectrum schmidt_spectrum(const PureBipartiteState& s);

/// alpha = diag(a1, a2, a3) / sqrt(3), with a1^2 + a2^2 + a3^2 = 3.
PureBipartiteState fu_family_state(double a1, double a2, double a3);

struct FamilyCoefficients {
  double a1, a2, a3;
};

/// a1 = a2 = sqrt(3 eps / 2), a3 = sqrt(3 (1 - eps)).
FamilyCoefficients epsilon_coefficients(double eps);
PureBipartiteState epsilon_state(double eps);

/// Coefficients of (UA (x) UB)|psi>: alpha' = UA alpha UB^T.
PureBipartiteState apply_local_unitary(const PureBipartiteState& s, const ComplexMatrix& ua,
                                       const ComplexMatrix& ub);

}  // namespace entangle
