#include "entangle/state_file.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "entangle/error.hpp"

namespace entangle {

using nlohmann::json;

namespace {

[[noreturn]] void bad_format(const std::string& what) { throw Error(ErrorKind::InvalidFormat, what); }

cplx parse_complex(const json& pair, std::size_t i, std::size_t j) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
    bad_format("alpha[" + std::to_string(i) + "][" + std::to_string(j) + "] must be an [re, im] pair of numbers");
  }
  return {pair[0].get<double>(), pair[1].get<double>()};
}

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

}  // namespace

PureBipartiteState state_from_json(const json& doc) {
  if (!doc.is_object()) bad_format("state file must be a JSON object");
  if (!doc.contains("d") || !doc["d"].is_number_integer()) bad_format("missing integer field \"d\"");
  const auto d_signed = doc["d"].get<long long>();
  if (d_signed < 2 || d_signed > 64) bad_format("\"d\" must lie in [2, 64]");
  const auto d = static_cast<std::size_t>(d_signed);
  if (!doc.contains("alpha") || !doc["alpha"].is_array()) bad_format("missing array field \"alpha\"");
  const json& rows = doc["alpha"];
  if (rows.size() != d) {
    throw Error(ErrorKind::DimensionMismatch, "alpha has " + std::to_string(rows.size()) + " rows, expected " +
                                                  std::to_string(d));
  }
  ComplexMatrix alpha(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!rows[i].is_array() || rows[i].size() != d) {
      throw Error(ErrorKind::DimensionMismatch, "alpha row " + std::to_string(i) + " must hold " +
                                                    std::to_string(d) + " entries");
    }
    for (std::size_t j = 0; j < d; ++j) alpha(i, j) = parse_complex(rows[i][j], i, j);
  }
  return make_state(d, std::move(alpha));
}

json state_to_json(const PureBipartiteState& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < s.dim(); ++j) row.push_back({s.alpha()(i, j).real(), s.alpha()(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return {{"d", s.dim()}, {"alpha", std::move(rows)}};
}

PureBipartiteState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    bad_format(path.string() + ": " + e.what());
  }
  return state_from_json(doc);
}

void write_state_file(const std::filesystem::path& path, const PureBipartiteState& s) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << std::setprecision(17) << state_to_json(s).dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

json report_to_json(const MeasureReport& r) {
  return {
      {"d", r.d},
      {"c_minors", optional_json(r.c_minors)},
      {"c_schmidt", r.c_schmidt},
      {"c_bloch", optional_json(r.c_bloch)},
      {"c_2x2", optional_json(r.c_2x2)},
      {"det_alpha_sq", r.det_alpha_sq},
      {"entropy_bits", r.entropy_bits},
      {"eof_closed_form", optional_json(r.eof_closed_form)},
      {"p_e", optional_json(r.p_e)},
      {"max_route_residual", r.max_route_residual},
  };
}

void print_report(std::ostream& out, const MeasureReport& r) {
  std::ostringstream s;
  s << std::setprecision(10);
  auto line = [&s](const char* label, double value) { s << "  " << std::left << std::setw(22) << label << value << '\n'; };
  auto maybe = [&line](const char* label, const std::optional<double>& value) {
    if (value) line(label, *value);
  };
  s << "d = " << r.d << '\n';
  s << "concurrence\n";
  maybe("minors", r.c_minors);
  line("schmidt", r.c_schmidt);
  maybe("bloch", r.c_bloch);
  maybe("2x2", r.c_2x2);
  line("route residual", r.max_route_residual);
  s << "other measures\n";
  line("|det alpha|^2", r.det_alpha_sq);
  line("entropy (ebits)", r.entropy_bits);
  maybe("eof closed form", r.eof_closed_form);
  maybe("P_E", r.p_e);
  out << s.str();
}

}  // namespace entangle
