#include "entangle/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "entangle/error.hpp"
#include "entangle/kernels.hpp"

namespace entangle {

PureBipartiteState make_state(std::size_t d, ComplexMatrix alpha) {
  if (d < 2) throw Error(ErrorKind::DimensionMismatch, "local dimension must be at least 2");
  if (alpha.rows() != d || alpha.cols() != d) {
    throw Error(ErrorKind::DimensionMismatch, "amplitude matrix is " + std::to_string(alpha.rows()) + "x" +
                                                  std::to_string(alpha.cols()) + ", expected " +
                                                  std::to_string(d) + "x" + std::to_string(d));
  }
  const double norm = std::sqrt(kernels::norm_sq(alpha.entries()));
  if (!std::isfinite(norm)) throw Error(ErrorKind::NotNormalized, "amplitudes are not finite");
  if (norm == 0.0) throw Error(ErrorKind::ZeroState, "all amplitudes vanish");
  // A few ulps of slack so that a value exactly 1e-6 away still counts.
  if (std::abs(norm - 1.0) > kRenormalizeTolerance + 1e-15) {
    throw Error(ErrorKind::NotNormalized, "normalization sum |alpha_ij|^2 = 1 violated: norm is " +
                                              std::to_string(norm));
  }
  // Leave already-normalized input bit-identical so that reloading a saved
  // state does not perturb it.
  if (std::abs(norm - 1.0) > 4.0 * std::numeric_limits<double>::epsilon()) alpha *= 1.0 / norm;
  return PureBipartiteState(std::move(alpha));
}

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
  if (!rho_.is_square()) throw Error(ErrorKind::NotSquare, "density matrix must be square");
  const double defect = hermiticity_defect(rho_);
  if (!(defect < kHermiticityTolerance)) {
    throw Error(ErrorKind::NotHermitian, "density matrix is not Hermitian");
  }
  const cplx tr = rho_.trace();
  if (std::abs(tr - 1.0) > kNormTolerance) {
    throw Error(ErrorKind::NotNormalized, "density matrix trace is " + std::to_string(tr.real()));
  }
  const auto w = hermitian_eigenvalues(rho_);
  if (w.front() < -kEigenClampTolerance) {
    throw Error(ErrorKind::OutOfRange, "density matrix has eigenvalue " + std::to_string(w.front()));
  }
}

std::vector<double> DensityMatrix::spectrum() const { return clamp_probabilities(hermitian_eigenvalues(rho_)); }

std::vector<double> clamp_probabilities(std::vector<double> eigenvalues) {
  for (auto& w : eigenvalues) {
    if (w < 0.0 && w >= -kEigenClampTolerance) w = 0.0;
    if (w > 1.0 && w <= 1.0 + kEigenClampTolerance) w = 1.0;
  }
  return eigenvalues;
}

std::vector<double> SchmidtSpectrum::squares() const {
  std::vector<double> sq(kappa.size());
  std::transform(kappa.begin(), kappa.end(), sq.begin(), [](double k) { return k * k; });
  return sq;
}

SchmidtSpectrum make_schmidt_spectrum(std::vector<double> kappa) {
  if (kappa.size() < 2) throw Error(ErrorKind::LengthMismatch, "Schmidt spectrum needs at least two coefficients");
  double sum_sq = 0.0;
  for (double k : kappa) {
    if (!(k >= 0.0)) throw Error(ErrorKind::ConstraintViolation, "Schmidt coefficients must be nonnegative");
    sum_sq += k * k;
  }
  if (std::abs(sum_sq - 1.0) > kNormTolerance) {
    throw Error(ErrorKind::ConstraintViolation, "Schmidt coefficients must satisfy sum kappa_i^2 = 1, got " +
                                                    std::to_string(sum_sq));
  }
  std::sort(kappa.begin(), kappa.end(), std::greater<>());
  return SchmidtSpectrum{std::move(kappa)};
}

DensityMatrix reduced_density(const PureBipartiteState& s, Side side) {
  // Partial traces: (rho_A)_ik = sum_j alpha_ij conj(alpha_kj), the row Gram
  // matrix of alpha; rho_B is the same for alpha^T, i.e. (alpha^dagger alpha)^T.
  return DensityMatrix(side == Side::A ? gram_rows(s.alpha()) : gram_rows(s.alpha().transpose()));
}

SchmidtSpectrum schmidt_spectrum(const PureBipartiteState& s) {
  const auto w = reduced_density(s, Side::A).spectrum();
  std::vector<double> kappa(w.size());
  std::transform(w.rbegin(), w.rend(), kappa.begin(), [](double p) { return std::sqrt(std::max(p, 0.0)); });
  return SchmidtSpectrum{std::move(kappa)};
}

PureBipartiteState fu_family_state(double a1, double a2, double a3) {
  const double bound = std::sqrt(3.0);
  const double sum_sq = a1 * a1 + a2 * a2 + a3 * a3;
  if (std::abs(sum_sq - 3.0) > 1e-9) {
    throw Error(ErrorKind::ConstraintViolation, "a1^2 + a2^2 + a3^2 = 3 violated: sum is " + std::to_string(sum_sq));
  }
  for (double a : {a1, a2, a3}) {
    if (std::abs(a) > bound + 1e-12) throw Error(ErrorKind::ConstraintViolation, "|a_i| exceeds sqrt(3)");
  }
  const double diag[] = {a1 / bound, a2 / bound, a3 / bound};
  return make_state(3, ComplexMatrix::diagonal(std::span<const double>(diag)));
}

FamilyCoefficients epsilon_coefficients(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw Error(ErrorKind::OutOfRange, "epsilon must lie in [0, 1]");
  const double a = std::sqrt(1.5 * eps);
  return {a, a, std::sqrt(3.0 * (1.0 - eps))};
}

PureBipartiteState epsilon_state(double eps) {
  const auto c = epsilon_coefficients(eps);
  return fu_family_state(c.a1, c.a2, c.a3);
}

PureBipartiteState apply_local_unitary(const PureBipartiteState& s, const ComplexMatrix& ua,
                                       const ComplexMatrix& ub) {
  const std::size_t d = s.dim();
  for (const auto* u : {&ua, &ub}) {
    if (u->rows() != d || u->cols() != d) throw Error(ErrorKind::DimensionMismatch, "local unitary has wrong size");
    const double defect = unitarity_defect(*u);
    if (!(defect < kUnitarityTolerance)) {
      throw Error(ErrorKind::NotUnitary, "max |U^dagger U - 1| = " + std::to_string(defect));
    }
  }
  return make_state(d, ua * s.alpha() * ub.transpose());
}

}  // namespace entangle
