#pragma once

// Randomized invariant checks over Haar-random states. Trial t draws from
// its own sampler seeded with derive_seed(seed, t), so any failure can be
// replayed from the reported trial seed alone, and the verdict does not
// depend on how trials are split across threads.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entangle/measures.hpp"
#include "entangle/states.hpp"

namespace entangle {

struct CheckOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t d = 3;
  unsigned threads = 1;
  // Run exactly one trial drawn from this sampler seed (a reported
  // worst_seed); trials and seed are then ignored.
  std::optional<std::uint64_t> replay_seed;
};

struct PropertyResult {
  std::string name;
  double tolerance = 0.0;
  double worst = 0.0;
  // Trial seed that produced `worst`.
  std::uint64_t worst_seed = 0;
  std::size_t evaluated = 0;

  bool passed() const noexcept { return worst <= tolerance; }
};

struct CheckSummary {
  std::vector<PropertyResult> properties;

  bool passed() const noexcept;
};

/// Max |difference| over every MeasureReport field. Infinite when an optional
/// field is present in one report and absent in the other.
double report_difference(const MeasureReport& a, const MeasureReport& b);

struct VietaResiduals {
  double sum;       // |sum lambda - 1|
  double pairs;     // |sum_{i<j} lambda_i lambda_j - C^2 / 3|
  double product;   // |lambda_1 lambda_2 lambda_3 - |det alpha|^2|
  double cubic;     // max |cubic root - eigenvalue|
};

/// Relations between the reduced-density spectrum, the minors concurrence
/// and det alpha for a d = 3 state.
VietaResiduals vieta_residuals(const PureBipartiteState& s);

CheckSummary run_property_checks(const CheckOptions& options);

}  // namespace entangle
