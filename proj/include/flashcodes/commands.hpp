#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace flashcodes {

inline constexpr const char* kVersion = "flashcodes " FLASHCODES_VERSION;

/// Everything a subcommand needs; echoed into every output it produces.
struct ExperimentConfig {
  std::string subcommand;
  std::string code;
  std::string graph;
  std::string seq = "random";
  std::size_t n = 0;
  unsigned q = 0;
  std::uint64_t L = 0;
  std::optional<std::uint64_t> delta;
  double epsilon = 0.15;
  double robust_c = 8.0;
  std::uint64_t t_target = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t cap = 2'000'000;
  std::uint64_t max_maps = 1u << 22;
  std::string format = "csv";
  std::string output_path;  // empty: standard output
  bool quiet = false;
  bool tamper_tie_break = false;

  nlohmann::ordered_json to_json() const;
};

// Each command writes its document to `out` and diagnostics to `err`.
// Errors propagate as exceptions; run_command maps them to exit codes.
void cmd_simulate(const ExperimentConfig& config, std::ostream& out);
void cmd_bounds(const ExperimentConfig& config, std::ostream& out);
void cmd_oracle(const ExperimentConfig& config, std::ostream& out);
void cmd_adversary(const ExperimentConfig& config, std::ostream& out);
/// Returns true when the worked example trace matches bit for bit.
bool cmd_worked_example(const ExperimentConfig& config, std::ostream& out);
void cmd_robust_eval(const ExperimentConfig& config, std::ostream& out);

/// Dispatches on config.subcommand, writing to config.output_path when set.
/// Exit codes: 0 success, 1 internal failure or golden mismatch, 2 invalid config.
int run_command(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace flashcodes
