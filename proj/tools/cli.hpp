#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torusvoa/rational.hpp"

namespace torusvoa::cli {

enum class OutputMode { text, json };

struct CliConfig {
  std::string subcommand;  ///< kostka | schur | jones | char | verify | selftest
  std::string target;      ///< verify: singlet | triplet | props
  std::string shape;
  std::string content;
  int rank = 2;
  int components = 1;
  int p = 1;
  int colour = 0;
  std::optional<int> coset;
  std::string shift = "none";
  std::string kind = "singlet";
  Rational order = 20;
  OutputMode mode = OutputMode::text;
  unsigned threads = 1;
  std::optional<std::string> output_path;
};

/// Exit statuses: 0 success (all verdicts pass), 1 a verdict failed,
/// 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Executes a validated config. Rendered output goes to `out` (or to the
/// configured output file), diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
/// The default truncation order is read from TORUSVOA_ORDER when set.
int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The small-scale invariant suite behind the `selftest` subcommand; one
/// line per check. Returns true when every check passed.
bool selftest(std::ostream& out, unsigned threads);

}  // namespace torusvoa::cli
