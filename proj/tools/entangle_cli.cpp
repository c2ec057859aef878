// entangle: entanglement measures for pure two-party states.
//
//   entangle measure <file> [--json]
//   entangle sweep [--n <int>] --out <path>
//   entangle check --trials <int> --seed <u64> --d <int>
//
// Exit codes: 0 success, 1 property failure, 2 invalid input, 3 I/O failure.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "entangle/error.hpp"
#include "entangle/kernels.hpp"
#include "entangle/measures.hpp"
#include "entangle/property_check.hpp"
#include "entangle/state_file.hpp"
#include "entangle/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitIo = 3;

int cmd_measure(const std::string& path, bool as_json) {
  const auto state = entangle::read_state_file(path);
  const auto report = entangle::full_report(state);
  if (as_json) {
    std::cout << std::setprecision(17) << entangle::report_to_json(report).dump(2) << '\n';
  } else {
    entangle::print_report(std::cout, report);
  }
  return kExitOk;
}

int cmd_sweep(std::size_t n, const std::string& out_path) {
  const auto rows = entangle::epsilon_sweep(n);
  if (out_path == "-") {
    entangle::write_sweep_csv(std::cout, rows);
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw entangle::IoError("cannot open " + out_path + " for writing");
  entangle::write_sweep_csv(out, rows);
  out.close();
  if (!out) throw entangle::IoError("write failed for " + out_path);
  return kExitOk;
}

int cmd_check(const entangle::CheckOptions& options) {
  const auto summary = entangle::run_property_checks(options);
  std::cout << "d = " << options.d << ", trials = " << (options.replay_seed ? 1 : options.trials)
            << ", kernels = " << entangle::kernels::active().name << '\n';
  for (const auto& p : summary.properties) {
    std::cout << (p.passed() ? "PASS " : "FAIL ") << std::left << std::setw(26) << p.name
              << " worst " << std::scientific << std::setprecision(3) << p.worst << " (tol " << p.tolerance << ")"
              << std::defaultfloat;
    if (!p.passed()) std::cout << "  reproduce with --replay " << p.worst_seed;
    std::cout << '\n';
  }
  if (!summary.passed()) {
    for (const auto& p : summary.properties)
      if (!p.passed()) std::cerr << "property " << p.name << " failed; trial seed " << p.worst_seed << '\n';
    return kExitPropertyFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement measures for pure bipartite qudit states"};
  app.require_subcommand(1);

  std::string kernels = "auto";
  app.add_option("--kernels", kernels, "Arithmetic kernels: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  std::string state_path;
  bool as_json = false;
  auto* measure = app.add_subcommand("measure", "Report every applicable measure for a state file");
  measure->add_option("file", state_path, "JSON state file")->required();
  measure->add_flag("--json", as_json, "Emit a JSON record");

  std::size_t sweep_n = entangle::kDefaultSweepPoints;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Write P_E and C along the epsilon family as CSV");
  sweep->add_option("--n", sweep_n, "Grid points on [0, 1]")->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}));
  sweep->add_option("--out", sweep_out, "Output path, or - for stdout")->required();

  entangle::CheckOptions check_options;
  std::uint64_t replay = 0;
  auto* check = app.add_subcommand("check", "Run randomized invariant checks on Haar-random states");
  check->add_option("--trials", check_options.trials, "Number of random states")->check(CLI::PositiveNumber);
  check->add_option("--seed", check_options.seed, "Base seed");
  check->add_option("--d", check_options.d, "Local dimension")->check(CLI::Range(std::size_t{2}, std::size_t{16}));
  check->add_option("--threads", check_options.threads, "Worker threads (0 = hardware)");
  auto* replay_opt = check->add_option("--replay", replay, "Rerun the single trial with this sampler seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  if (auto isa = entangle::kernels::parse_isa(kernels); !isa || !entangle::kernels::select_isa(*isa)) {
    std::cerr << "error: kernels '" << kernels << "' are not available on this CPU\n";
    return kExitInvalidInput;
  }

  try {
    if (*measure) return cmd_measure(state_path, as_json);
    if (*sweep) return cmd_sweep(sweep_n, sweep_out);
    if (*check) {
      if (check_options.threads == 0) check_options.threads = std::max(1u, std::thread::hardware_concurrency());
      if (*replay_opt) check_options.replay_seed = replay;
      return cmd_check(check_options);
    }
  } catch (const entangle::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const entangle::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
