#include "entangle/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "entangle/error.hpp"
#include "entangle/gellmann.hpp"

namespace entangle {

namespace {

constexpr double kFamilyTolerance = 1e-9;
constexpr double kRank2Bound = 0.8660254037844386;  // sqrt(3) / 2
constexpr double kRank2Slack = 1e-12;
constexpr double kVanishingKappa = 1e-9;

double clamp_unit(double x) noexcept { return std::clamp(x, 0.0, 1.0); }

void require_dim(const PureBipartiteState& s, std::size_t d, const char* what) {
  if (s.dim() != d) {
    throw Error(ErrorKind::WrongDimension, std::string(what) + " is defined for d = " + std::to_string(d) +
                                               ", got d = " + std::to_string(s.dim()));
  }
}

void require_family(double a1, double a2, double a3) {
  const double sum_sq = a1 * a1 + a2 * a2 + a3 * a3;
  if (std::abs(sum_sq - 3.0) > kFamilyTolerance) {
    throw Error(ErrorKind::ConstraintViolation, "a1^2 + a2^2 + a3^2 = 3 violated: sum is " + std::to_string(sum_sq));
  }
}

// Diagonal, real d = 3 amplitudes are the a_i / sqrt(3) of the Fu family.
std::optional<std::array<double, 3>> family_coefficients(const PureBipartiteState& s) {
  if (s.dim() != 3) return std::nullopt;
  const auto& a = s.alpha();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j && std::abs(a(i, j)) > 1e-12) return std::nullopt;
      if (i == j && std::abs(a(i, i).imag()) > 1e-12) return std::nullopt;
    }
  const double r3 = std::sqrt(3.0);
  return std::array<double, 3>{r3 * a(0, 0).real(), r3 * a(1, 1).real(), r3 * a(2, 2).real()};
}

}  // namespace

double MeasureReport::concurrence() const noexcept {
  if (c_minors) return *c_minors;
  if (c_2x2) return *c_2x2;
  return c_schmidt;
}

double concurrence_minors(const PureBipartiteState& s) {
  require_dim(s, 3, "concurrence_minors");
  const auto& a = s.alpha();
  auto m = [&](int i, int j) { return a(i - 1, j - 1); };
  // The nine 2x2 minors of alpha, one per pair of rows and pair of columns.
  const double sum = std::norm(m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) +
                     std::norm(m(1, 3) * m(2, 1) - m(1, 1) * m(2, 3)) +
                     std::norm(m(1, 2) * m(2, 3) - m(1, 3) * m(2, 2)) +
                     std::norm(m(1, 2) * m(3, 1) - m(1, 1) * m(3, 2)) +
                     std::norm(m(1, 1) * m(3, 3) - m(1, 3) * m(3, 1)) +
                     std::norm(m(2, 1) * m(3, 2) - m(2, 2) * m(3, 1)) +
                     std::norm(m(2, 3) * m(3, 1) - m(2, 1) * m(3, 3)) +
                     std::norm(m(1, 3) * m(3, 2) - m(1, 2) * m(3, 3)) +
                     std::norm(m(2, 2) * m(3, 3) - m(2, 3) * m(3, 2));
  return clamp_unit(std::sqrt(3.0 * sum));
}

double concurrence_schmidt(const SchmidtSpectrum& kappa, std::size_t d) {
  if (kappa.dim() != d) {
    throw Error(ErrorKind::LengthMismatch, "spectrum has " + std::to_string(kappa.dim()) +
                                               " coefficients, expected " + std::to_string(d));
  }
  if (d < 2) throw Error(ErrorKind::LengthMismatch, "need d >= 2");
  // sum_{i<j} k_i^2 k_j^2 = ((sum k^2)^2 - sum k^4) / 2 loses accuracy near
  // product states, so sum the pairs directly.
  const auto sq = kappa.squares();
  double pairs = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) pairs += sq[i] * sq[j];
  const double n = static_cast<double>(d);
  return clamp_unit(std::sqrt(std::max(0.0, 2.0 * n / (n - 1.0) * pairs)));
}

double concurrence_bloch(const PureBipartiteState& s) {
  if (s.dim() != 2 && s.dim() != 3) {
    throw Error(ErrorKind::WrongDimension, "concurrence_bloch is defined for d = 2 or 3, got d = " +
                                               std::to_string(s.dim()));
  }
  const double u = norm(bloch_expansion(s).u);
  return clamp_unit(std::sqrt(std::max(0.0, 1.0 - u * u)));
}

double concurrence_2x2(const PureBipartiteState& s) {
  require_dim(s, 2, "concurrence_2x2");
  const auto& a = s.alpha();
  return clamp_unit(2.0 * std::abs(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)));
}

double entropy_bits(std::span<const double> probabilities) noexcept {
  double h = 0.0;
  for (double p : probabilities)
    if (p > 0.0) h -= p * std::log2(p);
  return std::max(h, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto p = rho.spectrum();
  return entropy_bits(p);
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::OutOfRange, "binary entropy argument must lie in [0, 1]");
  const double pair[] = {x, 1.0 - x};
  return entropy_bits(pair);
}

double eof_2x2(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw Error(ErrorKind::OutOfRange, "two-qubit concurrence must lie in [0, 1]");
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double eof_qutrit_rank2(double c) {
  if (!(c >= 0.0 && c <= kRank2Bound + kRank2Slack)) {
    throw Error(ErrorKind::OutOfRange, "concurrence " + std::to_string(c) +
                                           " exceeds sqrt(3)/2; the state is not rank 2");
  }
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 * c * c / 3.0))));
}

double p_e(double a1, double a2, double a3) {
  require_family(a1, a2, a3);
  return clamp_unit((std::abs(a1 * a2) + std::abs(a1 * a3) + std::abs(a2 * a3)) / 3.0);
}

double concurrence_family(double a1, double a2, double a3) {
  require_family(a1, a2, a3);
  const double s1 = a1 * a1, s2 = a2 * a2, s3 = a3 * a3;
  return clamp_unit(std::sqrt((s1 * s2 + s1 * s3 + s2 * s3) / 3.0));
}

MeasureReport full_report(const PureBipartiteState& s) {
  const std::size_t d = s.dim();
  MeasureReport r;
  r.d = d;

  const auto rho_a = reduced_density(s, Side::A);
  const auto probs = rho_a.spectrum();
  std::vector<double> kappa(d);
  std::transform(probs.rbegin(), probs.rend(), kappa.begin(), [](double p) { return std::sqrt(std::max(p, 0.0)); });
  const SchmidtSpectrum spectrum{kappa};

  r.c_schmidt = concurrence_schmidt(spectrum, d);
  if (d == 3) r.c_minors = concurrence_minors(s);
  if (d == 2) r.c_2x2 = concurrence_2x2(s);
  if (d == 2 || d == 3) r.c_bloch = concurrence_bloch(s);

  r.det_alpha_sq = std::norm(determinant(s.alpha()));
  r.entropy_bits = entropy_bits(probs);

  if (d == 2) r.eof_closed_form = eof_2x2(*r.c_2x2);
  if (d == 3 && kappa[2] < kVanishingKappa) r.eof_closed_form = eof_qutrit_rank2(std::min(*r.c_minors, kRank2Bound));

  if (auto a = family_coefficients(s)) r.p_e = p_e((*a)[0], (*a)[1], (*a)[2]);

  std::vector<double> routes{r.c_schmidt};
  for (const auto& c : {r.c_minors, r.c_bloch, r.c_2x2})
    if (c) routes.push_back(*c);
  for (std::size_t i = 0; i < routes.size(); ++i)
    for (std::size_t j = i + 1; j < routes.size(); ++j)
      r.max_route_residual = std::max(r.max_route_residual, std::abs(routes[i] - routes[j]));
  return r;
}

}  // namespace entangle
