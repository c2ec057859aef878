#include "entangle/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "entangle/error.hpp"
#include "entangle/kernels.hpp"

namespace entangle {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NotSquare, std::string(what) + " needs a square matrix, got " +
                                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "entry count " + std::to_string(data_.size()) +
                                                  " does not match " + std::to_string(rows) + "x" +
                                                  std::to_string(cols));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
  const ComplexMatrix bt = b.transpose();
  const auto& k = kernels::active();
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = k.dotu(a.row(i).data(), bt.row(j).data(), a.cols());
  return c;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix gram_rows(const ComplexMatrix& a) {
  const auto& k = kernels::active();
  ComplexMatrix g(a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    g(i, i) = k.norm_sq(a.row(i).data(), a.cols());
    for (std::size_t j = i + 1; j < a.rows(); ++j) {
      g(i, j) = k.dotc(a.row(i).data(), a.row(j).data(), a.cols());
      g(j, i) = std::conj(g(i, j));
    }
  }
  return g;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix outer(std::span<const cplx> ket) {
  ComplexMatrix out(ket.size(), ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < ket.size(); ++j) out(i, j) = ket[i] * std::conj(ket[j]);
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

double max_abs(const ComplexMatrix& m) {
  double worst = 0.0;
  for (const auto& z : m.entries()) worst = std::max(worst, std::abs(z));
  return worst;
}

double frobenius_norm_sq(const ComplexMatrix& m) { return kernels::norm_sq(m.entries()); }

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m, "hermiticity check");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

double unitarity_defect(const ComplexMatrix& u) {
  require_square(u, "unitarity check");
  // gram_rows(U^T) is the conjugate of U^dagger U; the distance to 1 is the same.
  return max_abs_diff(gram_rows(u.transpose()), ComplexMatrix::identity(u.rows()));
}

double cubic_residual(const CubicCoefficients& c, double x) noexcept {
  return std::abs(((x + c.c2) * x + c.c1) * x + c.c0);
}

namespace detail {

std::array<double, 3> trigonometric_roots(double shift, double radius, double arg) noexcept {
  const double phi = std::acos(std::clamp(arg, -1.0, 1.0)) / 3.0;
  constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;
  const double largest = shift + 2.0 * radius * std::cos(phi);
  const double smallest = shift + 2.0 * radius * std::cos(phi - 2.0 * third_turn);
  // The middle root from the trace keeps the three summing to 3*shift.
  const double middle = 3.0 * shift - largest - smallest;
  return {largest, std::clamp(middle, smallest, largest), smallest};
}

}  // namespace detail

std::array<double, 3> solve_monic_cubic_real(const CubicCoefficients& c) {
  if (!std::isfinite(c.c2) || !std::isfinite(c.c1) || !std::isfinite(c.c0)) {
    throw Error(ErrorKind::ComplexRoots, "non-finite cubic coefficient");
  }
  const double scale = std::max({std::abs(c.c2), std::sqrt(std::abs(c.c1)), std::cbrt(std::abs(c.c0))});
  if (scale == 0.0) return {0.0, 0.0, 0.0};

  // Depressed form t^3 + p t + q with x = t - c2/3.
  const double shift = -c.c2 / 3.0;
  const double p = c.c1 - c.c2 * c.c2 / 3.0;
  const double q = (2.0 * c.c2 * c.c2 * c.c2) / 27.0 - c.c2 * c.c1 / 3.0 + c.c0;

  constexpr double noise = 16.0 * std::numeric_limits<double>::epsilon();
  std::array<double, 3> roots;
  if (std::abs(p) <= noise * scale * scale && std::abs(q) <= noise * scale * scale * scale) {
    // Triple root; p and q are rounding noise around zero.
    roots = {shift, shift, shift};
  } else if (p >= 0.0) {
    roots = {shift, shift, shift};
  } else {
    const double radius = std::sqrt(-p / 3.0);
    roots = detail::trigonometric_roots(shift, radius, -q / (2.0 * radius * radius * radius));
  }

  // A small residual alone is not enough: with a complex pair the single real
  // root passes it. The three roots must also reproduce c1 and c0.
  const double s2 = std::max(1.0, scale * scale);
  const double s3 = std::max(1.0, scale * scale * scale);
  const double pairs = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2];
  const double product = roots[0] * roots[1] * roots[2];
  if (std::abs(pairs - c.c1) > 1e-9 * s2 || std::abs(product + c.c0) > 1e-9 * s3) {
    throw Error(ErrorKind::ComplexRoots, "cubic has a complex-conjugate root pair");
  }
  for (double r : roots) {
    if (cubic_residual(c, r) >= kCubicResidualTolerance * s3) {
      throw Error(ErrorKind::ComplexRoots, "cubic has a complex-conjugate root pair (residual " +
                                               std::to_string(cubic_residual(c, r)) + ")");
    }
  }
  return roots;
}

namespace {

bool is_diagonal(const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != cplx(0.0)) return false;
  return true;
}

std::vector<double> eigenvalues_2x2(const ComplexMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  return {mean - radius, mean + radius};
}

using Vec3 = std::array<cplx, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm_sq3(const Vec3& a) { return std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]); }

cplx quad_form(const ComplexMatrix& m, const Vec3& x, const Vec3& y) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += std::conj(x[i]) * m(i, j) * y[j];
  return s;
}

std::vector<double> eigenvalues_3x3(const ComplexMatrix& m) {
  const double shift = (m(0, 0).real() + m(1, 1).real() + m(2, 2).real()) / 3.0;
  ComplexMatrix b = m;
  for (std::size_t i = 0; i < 3; ++i) b(i, i) = m(i, i).real() - shift;
  // Traceless part B: its eigenvalues solve t^3 - (tr B^2 / 2) t - det B = 0.
  // Taking p from the sum of squares avoids the cancellation in c1 - c2^2/3.
  const double p2 = frobenius_norm_sq(b) / 6.0;
  if (p2 == 0.0) return {shift, shift, shift};
  const double radius = std::sqrt(p2);
  b *= 1.0 / radius;
  const double half_det = 0.5 * determinant(b).real();
  const auto roots = detail::trigonometric_roots(0.0, 1.0, half_det);

  // Only the root farthest from the mean is well conditioned in this form;
  // near a double root the other two carry sqrt(eps) error. Take that root,
  // find its eigenvector, and solve the orthogonal 2x2 block exactly.
  const double t1 = half_det >= 0.0 ? roots[0] : roots[2];
  Vec3 rows[3];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) rows[i][j] = b(i, j) - (i == j ? t1 : 0.0);
  Vec3 v = cross(rows[0], rows[1]);
  for (const auto& c : {cross(rows[0], rows[2]), cross(rows[1], rows[2])})
    if (norm_sq3(c) > norm_sq3(v)) v = c;
  const double v_norm = std::sqrt(norm_sq3(v));
  for (auto& z : v) z /= v_norm;

  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(v[i]) < std::abs(v[k])) k = i;
  Vec3 u1{};
  u1[k] = 1.0;
  const cplx overlap = std::conj(v[k]);
  for (std::size_t i = 0; i < 3; ++i) u1[i] -= overlap * v[i];
  const double u1_norm = std::sqrt(norm_sq3(u1));
  for (auto& z : u1) z /= u1_norm;
  Vec3 u2 = cross(v, u1);
  for (auto& z : u2) z = std::conj(z);

  const ComplexMatrix block{{quad_form(b, u1, u1), quad_form(b, u1, u2)},
                            {quad_form(b, u2, u1), quad_form(b, u2, u2)}};
  const auto rest = eigenvalues_2x2(block);
  return {shift + radius * t1, shift + radius * rest[0], shift + radius * rest[1]};
}

}  // namespace

namespace detail {

std::vector<double> jacobi_eigenvalues(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  const double total = frobenius_norm_sq(a);
  const double threshold = total * 1e-34;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off <= threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Phase e^{-i theta} on column q makes a_pq real, then a real Jacobi
        // rotation zeroes it. G is the combined 2x2 unitary on (p, q).
        const cplx phase = std::conj(a(p, q)) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx gpp = c, gpq = s, gqp = -s * phase, gqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = a(i, i).real();
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace detail

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigenvalues");
  const double defect = hermiticity_defect(m);
  if (!(defect < kHermiticityTolerance)) {
    throw Error(ErrorKind::NotHermitian, "max |M - M^dagger| = " + std::to_string(defect));
  }
  std::vector<double> w;
  if (is_diagonal(m)) {
    for (std::size_t i = 0; i < m.rows(); ++i) w.push_back(m(i, i).real());
    std::sort(w.begin(), w.end());
    return w;
  }
  switch (m.rows()) {
    case 1: w = {m(0, 0).real()}; break;
    case 2: w = eigenvalues_2x2(m); break;
    case 3: w = eigenvalues_3x3(m); break;
    default: return detail::jacobi_eigenvalues(m);
  }
  std::sort(w.begin(), w.end());
  return w;
}

cplx determinant(const ComplexMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (n == 3) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  // LU with partial pivoting.
  ComplexMatrix lu = m;
  cplx det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
    if (lu(pivot, k) == cplx(0.0)) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = lu(i, k) / lu(k, k);
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

QrFactors qr_decompose(const ComplexMatrix& a) {
  require_square(a, "qr_decompose");
  const std::size_t n = a.rows();
  ComplexMatrix r = a;
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<cplx> v(n);

  for (std::size_t k = 0; k + 1 < n; ++k) {
    double norm_sq = 0.0;
    for (std::size_t i = k; i < n; ++i) norm_sq += std::norm(r(i, k));
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0) continue;

    const cplx x0 = r(k, k);
    const cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx(1.0);
    const cplx alpha = -phase * norm;
    std::fill(v.begin(), v.end(), cplx(0.0));
    for (std::size_t i = k; i < n; ++i) v[i] = r(i, k);
    v[k] -= alpha;
    double v_norm_sq = 0.0;
    for (std::size_t i = k; i < n; ++i) v_norm_sq += std::norm(v[i]);
    if (v_norm_sq == 0.0) continue;

    // H = 1 - 2 v v^dagger / |v|^2; R <- H R, Q <- Q H.
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t i = k; i < n; ++i) s += std::conj(v[i]) * r(i, j);
      s *= 2.0 / v_norm_sq;
      for (std::size_t i = k; i < n; ++i) r(i, j) -= v[i] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = 0.0;
      for (std::size_t l = k; l < n; ++l) s += q(i, l) * v[l];
      s *= 2.0 / v_norm_sq;
      for (std::size_t l = k; l < n; ++l) q(i, l) -= s * std::conj(v[l]);
    }
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) r(i, j) = 0.0;
  return {std::move(q), std::move(r)};
}

}  // namespace entangle
