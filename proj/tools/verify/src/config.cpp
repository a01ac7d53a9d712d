#include "crprime_tools/config.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace crprime::tools {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{"order", "tol",           "grid",            "seed",   "format",
                                          "golden", "green_power", "perturb_weight4", "timings"};
  return keys;
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T out{};
  in >> out;
  if (in.fail() || !in.eof()) throw std::invalid_argument("config: bad value for " + key + ": '" + value + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("config: bad boolean for " + key + ": '" + value + "'");
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (!known_keys().count(key))
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    out[key] = value;
  }
  return out;
}

void apply_key_values(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "order") cfg.order = parse_number<int>(key, value);
    else if (key == "tol") cfg.tol = parse_number<double>(key, value);
    else if (key == "grid") cfg.grid = parse_number<int>(key, value);
    else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "format") cfg.format = value;
    else if (key == "golden") cfg.golden = value;
    else if (key == "green_power") cfg.green_power = parse_number<int>(key, value);
    else if (key == "perturb_weight4") cfg.perturb_weight4 = parse_bool(key, value);
    else if (key == "timings") cfg.timings = parse_bool(key, value);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  validate(cfg);
}

void validate(const RunConfig& cfg) {
  if (cfg.order < 6 || cfg.order > 16) throw std::invalid_argument("config: order must be in [6, 16]");
  if (!(cfg.tol > 0)) throw std::invalid_argument("config: tol must be positive");
  if (cfg.grid < 8 || cfg.grid > 1024) throw std::invalid_argument("config: grid must be in [8, 1024]");
  if (cfg.format != "text" && cfg.format != "json") throw std::invalid_argument("config: format must be text or json");
  if (cfg.green_power < 1 || cfg.green_power > 4) throw std::invalid_argument("config: green_power must be in [1, 4]");
}

}  // namespace crprime::tools
