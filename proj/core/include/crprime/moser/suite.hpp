#pragma once

#include <cstdint>
#include <string>

#include "crprime/moser/moser.hpp"
#include "crprime/verify/check.hpp"

namespace crprime {

struct MoserSuiteConfig {
  int order = 8;
  std::uint64_t seed = 1;
  std::string golden_json;        // contents of the golden expansion file
  bool perturb_weight4 = false;   // add a non-normal-form z^2 zb^2 term to E
};

/// The weight-4 term added by MoserSuiteConfig::perturb_weight4.
Poly weight4_perturbation();

CheckList moser_suite(const MoserSuiteConfig& cfg);

}  // namespace crprime
