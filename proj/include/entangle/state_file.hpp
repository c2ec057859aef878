#pragma once

// JSON state files and report rendering.
//
// A state file holds
//   {"d": 3, "alpha": [[[re, im], [re, im], [re, im]], ...]}
// with alpha row-major: alpha[i][j] is the amplitude of |i, j>.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "entangle/measures.hpp"
#include "entangle/states.hpp"

namespace entangle {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PureBipartiteState state_from_json(const nlohmann::json& doc);
nlohmann::json state_to_json(const PureBipartiteState& s);

// Throws IoError if the file cannot be read, Error(InvalidFormat, ...) for
// malformed JSON, and the usual state errors for invalid amplitudes.
PureBipartiteState read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const PureBipartiteState& s);

// Every field is always present; absent measures are null.
nlohmann::json report_to_json(const MeasureReport& r);
void print_report(std::ostream& out, const MeasureReport& r);

}  // namespace entangle
