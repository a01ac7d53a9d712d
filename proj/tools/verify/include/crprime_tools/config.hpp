#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace crprime::tools {

/// Settings shared by `run` and `expand`. Every field can come from a
/// key = value file and be overridden on the command line.
struct RunConfig {
  int order = 8;                // Moser truncation order
  double tol = 1e-6;            // relative tolerance for numerical checks
  int grid = 48;                // base radial node count of the chart quadrature
  std::uint64_t seed = 1;       // randomized instances and probe points
  std::string format = "text";  // text | json
  std::string golden;           // golden expansion file; empty means the built-in path
  int green_power = 1;          // negative control: power of rho^2 in the Green's function
  bool perturb_weight4 = false; // negative control: non-normal-form term in E
  bool timings = false;         // include per-check runtimes (breaks byte-identical output)
};

/// Parses `key = value` lines; '#' starts a comment. Throws
/// std::invalid_argument with the line number on malformed input or unknown keys.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Applies parsed keys to `cfg`. Throws std::invalid_argument on bad values.
void apply_key_values(RunConfig& cfg, const std::map<std::string, std::string>& kv);

/// Throws std::invalid_argument if a value is out of range.
void validate(const RunConfig& cfg);

}  // namespace crprime::tools
