#pragma once

#include <string>
#include <vector>

#include "crprime_tools/report.hpp"

namespace crprime::tools {

const std::vector<std::string>& suite_names();  // all, moser, heisenberg, conformal, sphere

/// Golden file used when the config leaves it empty: $CRPRIME_GOLDEN, else the
/// source tree copy if present, else the installed copy.
std::string default_golden_path();

/// Throws std::invalid_argument for an unknown suite or unreadable golden file.
Report run(const std::string& suite, const RunConfig& cfg);

}  // namespace crprime::tools
