#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"

namespace aksw::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kResource = 3 };

/// Invalid flags or an inconsistent configuration.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The configuration is valid but exceeds the configured resource limits.
class ResourceRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<int> d;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::vector<int>> levi;
  std::vector<std::string> suites;
  std::optional<std::string> preset;
  std::optional<std::string> out;
  std::vector<std::string> specialize;
  std::optional<std::uint64_t> prime;
  unsigned jobs = 1;
  bool timings = false;
  std::string format = "json";
  std::size_t max_dim = 3000;
};

/// Limits applied before any exact computation starts.
inline constexpr std::size_t kMaxAlgebraDim = 2000;  // d^n n! for regular-representation suites
inline constexpr std::size_t kMaxSpechtDim = 50000;  // d^n n! for the Specht suite
inline constexpr int kMaxD = 7;                      // parameters l1..l7

Report cmd_dims(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg);
Report cmd_schur_weyl(const RunConfig& cfg);

/// Tracked-space dimension of M^p(Lambda) (x) V^{(x)n}, from Kostant counts.
std::size_t tracked_dimension(const std::vector<int>& levi, int n);

struct Outcome {
  int exit_code = kPass;
  std::string out;  // report text destined for stdout (empty when written to a file)
  std::string err;
};

/// Parses argv-style arguments (without the program name), runs the command
/// and renders the report. Never throws.
Outcome run(const std::vector<std::string>& args);

}  // namespace aksw::cli
