#pragma once

// Small dense complex linear algebra. Everything here is sized for local
// dimensions up to 16; no blocking, no external BLAS.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace entangle {

using cplx = std::complex<double>;

inline constexpr double kHermiticityTolerance = 1e-9;
inline constexpr double kUnitarityTolerance = 1e-9;
inline constexpr double kCubicResidualTolerance = 1e-10;

/// Row-major dense complex matrix with at least one row and one column.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<const cplx> entries() const noexcept { return data_; }
  std::span<cplx> entries() noexcept { return data_; }
  std::span<const cplx> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, ComplexMatrix m);

// a * a^dagger, with entries formed as row-by-row conjugated dot products.
ComplexMatrix gram_rows(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix outer(std::span<const cplx> ket);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& m);
double frobenius_norm_sq(const ComplexMatrix& m);
// max_ij |M - M^dagger|_ij
double hermiticity_defect(const ComplexMatrix& m);
// max_ij |U^dagger U - 1|_ij
double unitarity_defect(const ComplexMatrix& u);

/// Monic cubic x^3 + c2 x^2 + c1 x + c0.
struct CubicCoefficients {
  double c2;
  double c1;
  double c0;
};

double cubic_residual(const CubicCoefficients& c, double x) noexcept;

/// Three real roots, descending, by the trigonometric method. Throws
/// ComplexRoots when the clamped roots fail the residual bound, i.e. the
/// cubic has a conjugate pair beyond rounding noise.
std::array<double, 3> solve_monic_cubic_real(const CubicCoefficients& c);

/// Real eigenvalues of a Hermitian matrix in ascending order.
///
/// n = 2 and n = 3 use closed forms (the 3x3 case is the trigonometric cubic
/// applied to the traceless part of M); larger matrices use cyclic complex
/// Jacobi rotations.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

cplx determinant(const ComplexMatrix& m);

struct QrFactors {
  ComplexMatrix q;
  ComplexMatrix r;
};

// Householder QR of a square matrix. R's diagonal carries arbitrary phases.
QrFactors qr_decompose(const ComplexMatrix& a);

namespace detail {
// Roots shift + 2 radius cos(acos(arg)/3 - 2 pi k / 3), k = 0, 1, 2, with
// arg clamped to [-1, 1]. Descending order.
std::array<double, 3> trigonometric_roots(double shift, double radius, double arg) noexcept;

std::vector<double> jacobi_eigenvalues(const ComplexMatrix& m);
}  // namespace detail

}  // namespace entangle
