#pragma once

#include <string>
#include <vector>

#include "crprime_tools/config.hpp"

namespace crprime::tools {

const std::vector<std::string>& expand_quantities();  // R, A, g, lambda, pe_tensor, szego
const std::vector<std::string>& expand_instances();   // generic, flat, random

struct Expansion {
  std::string quantity;
  std::string instance;
  int order = 0;
  std::string printed;    // printed form in terms of E, "" if none
  std::string corrected;  // printed form with errata applied, "" if no errata
  std::string engine;     // engine series (or closed form) on the instance
  std::string agrees_with;  // printed | corrected | none | closed_form
  std::string json_terms;   // canonical JSON term list of the engine result
};

/// Throws std::invalid_argument for an unknown quantity or instance.
Expansion expand(const std::string& quantity, const std::string& instance, const RunConfig& cfg);

std::string to_text(const Expansion& e);
std::string to_json(const Expansion& e);

}  // namespace crprime::tools
