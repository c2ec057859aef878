#include "entangle/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "entangle/error.hpp"
#include "entangle/measures.hpp"
#include "entangle/states.hpp"

namespace entangle {

SweepRow sweep_row(double epsilon) {
  const auto a = epsilon_coefficients(epsilon);
  return {epsilon, p_e(a.a1, a.a2, a.a3), concurrence_family(a.a1, a.a2, a.a3)};
}

std::vector<SweepRow> epsilon_sweep(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "sweep needs at least two points");
  constexpr double landmark = 2.0 / 3.0;
  std::vector<SweepRow> rows;
  rows.reserve(n + 1);
  bool landmark_seen = false;
  for (std::size_t i = 0; i < n; ++i) {
    const double eps = static_cast<double>(i) / static_cast<double>(n - 1);
    if (std::abs(eps - landmark) < 1e-12) landmark_seen = true;
    if (!landmark_seen && eps > landmark) {
      rows.push_back(sweep_row(landmark));
      landmark_seen = true;
    }
    rows.push_back(sweep_row(eps));
  }
  return rows;
}

std::string format_csv_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "epsilon,p_e,c\n";
  for (const auto& r : rows) {
    out << format_csv_number(r.epsilon) << ',' << format_csv_number(r.p_e) << ',' << format_csv_number(r.c) << '\n';
  }
}

}  // namespace entangle
