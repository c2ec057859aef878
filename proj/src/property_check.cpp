#include "entangle/property_check.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "entangle/error.hpp"
#include "entangle/gellmann.hpp"
#include "entangle/sampling.hpp"

namespace entangle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double optional_difference(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return kInf;
  return a ? std::abs(*a - *b) : 0.0;
}

struct Property {
  const char* name;
  double tolerance;
  bool (*applies)(std::size_t d);
};

bool any_d(std::size_t) { return true; }
bool qubit_or_qutrit(std::size_t d) { return d == 2 || d == 3; }
bool qutrit(std::size_t d) { return d == 3; }

const Property kProperties[] = {
    {"route-agreement", 1e-9, qubit_or_qutrit},
    {"bloch-norm-symmetry", 1e-10, any_d},
    {"local-unitary-invariance", 1e-9, any_d},
    {"schmidt-normalization", 1e-10, any_d},
    {"concurrence-range", 0.0, any_d},
    {"vieta", 1e-10, qutrit},
    {"cubic-consistency", 1e-9, qutrit},
    {"oracle-equivalence", 1e-12, qutrit},
};
constexpr std::size_t kPropertyCount = std::size(kProperties);

using TrialResiduals = std::array<double, kPropertyCount>;

double range_violation(double c) { return std::max({0.0, -c, c - 1.0}); }

TrialResiduals evaluate_trial(std::uint64_t trial_seed, std::size_t d) {
  SeededSampler rng(trial_seed);
  const auto state = random_pure_state(rng, d);
  const auto ua = random_unitary(rng, d);
  const auto ub = random_unitary(rng, d);

  TrialResiduals res{};
  const auto report = full_report(state);
  const auto rotated = full_report(apply_local_unitary(state, ua, ub));
  res[0] = report.max_route_residual;

  const auto bloch = bloch_expansion(state);
  res[1] = std::abs(norm(bloch.u) - norm(bloch.v));
  res[2] = report_difference(report, rotated);

  const auto kappa = schmidt_spectrum(state);
  double sum_sq = 0.0;
  for (double k : kappa.kappa) sum_sq += k * k;
  res[3] = std::abs(sum_sq - 1.0);

  double range = range_violation(report.c_schmidt);
  for (const auto& c : {report.c_minors, report.c_bloch, report.c_2x2})
    if (c) range = std::max(range, range_violation(*c));
  res[4] = range;

  if (d == 3) {
    const auto v = vieta_residuals(state);
    res[5] = std::max({v.sum, v.pairs, v.product});
    res[6] = v.cubic;
    res[7] = std::abs(oracle_concurrence_minors(state) - concurrence_minors(state));
  }
  return res;
}

struct Accumulator {
  std::array<double, kPropertyCount> worst{};
  std::array<std::size_t, kPropertyCount> worst_trial{};

  void add(std::size_t trial, const TrialResiduals& r) {
    for (std::size_t p = 0; p < kPropertyCount; ++p) {
      // NaN counts as the worst possible outcome.
      const double value = std::isnan(r[p]) ? kInf : r[p];
      if (value > worst[p] || (value == worst[p] && trial < worst_trial[p])) {
        worst[p] = value;
        worst_trial[p] = trial;
      }
    }
  }

  void merge(const Accumulator& other) {
    for (std::size_t p = 0; p < kPropertyCount; ++p) {
      if (other.worst[p] > worst[p] || (other.worst[p] == worst[p] && other.worst_trial[p] < worst_trial[p])) {
        worst[p] = other.worst[p];
        worst_trial[p] = other.worst_trial[p];
      }
    }
  }
};

}  // namespace

bool CheckSummary::passed() const noexcept {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

double report_difference(const MeasureReport& a, const MeasureReport& b) {
  if (a.d != b.d) return kInf;
  return std::max({optional_difference(a.c_minors, b.c_minors), std::abs(a.c_schmidt - b.c_schmidt),
                   optional_difference(a.c_bloch, b.c_bloch), optional_difference(a.c_2x2, b.c_2x2),
                   std::abs(a.det_alpha_sq - b.det_alpha_sq), std::abs(a.entropy_bits - b.entropy_bits),
                   optional_difference(a.eof_closed_form, b.eof_closed_form), optional_difference(a.p_e, b.p_e),
                   std::abs(a.max_route_residual - b.max_route_residual)});
}

VietaResiduals vieta_residuals(const PureBipartiteState& s) {
  if (s.dim() != 3) throw Error(ErrorKind::WrongDimension, "Vieta relations are checked at d = 3 only");
  auto w = hermitian_eigenvalues(reduced_density(s, Side::A).matrix());
  std::sort(w.begin(), w.end(), std::greater<>());
  const double c = concurrence_minors(s);
  const double det_sq = std::norm(determinant(s.alpha()));

  VietaResiduals r{};
  r.sum = std::abs(w[0] + w[1] + w[2] - 1.0);
  r.pairs = std::abs(w[0] * w[1] + w[0] * w[2] + w[1] * w[2] - c * c / 3.0);
  r.product = std::abs(w[0] * w[1] * w[2] - det_sq);

  const auto roots = solve_monic_cubic_real({-1.0, c * c / 3.0, -det_sq});
  for (std::size_t i = 0; i < 3; ++i) r.cubic = std::max(r.cubic, std::abs(roots[i] - w[i]));
  return r;
}

CheckSummary run_property_checks(const CheckOptions& options) {
  if (options.replay_seed) {
    if (options.d < 2) throw Error(ErrorKind::DimensionMismatch, "local dimension must be at least 2");
    const auto r = evaluate_trial(*options.replay_seed, options.d);
    CheckSummary summary;
    for (std::size_t p = 0; p < kPropertyCount; ++p) {
      if (!kProperties[p].applies(options.d)) continue;
      summary.properties.push_back({kProperties[p].name, kProperties[p].tolerance, r[p], *options.replay_seed, 1});
    }
    return summary;
  }
  if (options.trials < 1) throw Error(ErrorKind::OutOfRange, "need at least one trial");
  if (options.d < 2) throw Error(ErrorKind::DimensionMismatch, "local dimension must be at least 2");

  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(options.trials)));
  std::vector<Accumulator> partial(workers);
  auto run_block = [&](unsigned w) {
    for (std::size_t t = w; t < options.trials; t += workers) {
      TrialResiduals r;
      try {
        r = evaluate_trial(derive_seed(options.seed, t), options.d);
      } catch (const Error&) {
        r.fill(kInf);
      }
      partial[w].add(t, r);
    }
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
  }
  Accumulator total;
  total.worst_trial.fill(std::numeric_limits<std::size_t>::max());
  for (const auto& p : partial) total.merge(p);

  CheckSummary summary;
  for (std::size_t p = 0; p < kPropertyCount; ++p) {
    if (!kProperties[p].applies(options.d)) continue;
    summary.properties.push_back({kProperties[p].name, kProperties[p].tolerance, total.worst[p],
                                  derive_seed(options.seed, total.worst_trial[p]), options.trials});
  }
  return summary;
}

}  // namespace entangle
