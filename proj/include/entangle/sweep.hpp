#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace entangle {

inline constexpr std::size_t kDefaultSweepPoints = 101;

struct SweepRow {
  double epsilon;
  double p_e;
  double c;
};

SweepRow sweep_row(double epsilon);

/// P_E and C along the a1 = a2 slice of the diagonal qutrit family, on n
/// uniform points of [0, 1]. The maximally entangled point epsilon = 2/3 is
/// inserted (in order) when the grid does not already contain it.
std::vector<SweepRow> epsilon_sweep(std::size_t n);

// Shortest round-trip-free text with 9 significant digits, '.' separator.
std::string format_csv_number(double x);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace entangle
