#include "crprime_tools/runner.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "crprime/heisenberg/conformal.hpp"
#include "crprime/heisenberg/green.hpp"
#include "crprime/moser/suite.hpp"
#include "crprime/sphere/sphere.hpp"

#ifndef CRPRIME_DEFAULT_GOLDEN
#define CRPRIME_DEFAULT_GOLDEN "data/golden/moser_expansions.json"
#endif
#ifndef CRPRIME_INSTALLED_GOLDEN
#define CRPRIME_INSTALLED_GOLDEN CRPRIME_DEFAULT_GOLDEN
#endif

namespace crprime::tools {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read golden file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CheckList run_one(const std::string& suite, const RunConfig& cfg, const std::string& golden_text) {
  if (suite == "moser") {
    MoserSuiteConfig mc;
    mc.order = cfg.order;
    mc.seed = cfg.seed;
    mc.golden_json = golden_text;
    mc.perturb_weight4 = cfg.perturb_weight4;
    return moser_suite(mc);
  }
  if (suite == "heisenberg") return heisenberg_suite(cfg.seed, cfg.green_power);
  if (suite == "conformal") return conformal_suite(cfg.order);
  if (suite == "sphere") {
    SphereSuiteConfig sc;
    sc.quadrature.radial = cfg.grid;
    sc.quadrature.polar = std::max(4, 2 * cfg.grid / 3);
    sc.quadrature.azimuthal = std::max(4, cfg.grid / 6);
    sc.tolerance = cfg.tol;
    sc.seed = cfg.seed;
    return sphere_suite(sc);
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "moser", "heisenberg", "conformal", "sphere"};
  return names;
}

std::string default_golden_path() {
  if (const char* env = std::getenv("CRPRIME_GOLDEN"); env && *env) return env;
  if (std::filesystem::exists(CRPRIME_DEFAULT_GOLDEN)) return CRPRIME_DEFAULT_GOLDEN;
  return CRPRIME_INSTALLED_GOLDEN;
}

Report run(const std::string& suite, const RunConfig& cfg) {
  validate(cfg);
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  Report report;
  report.suite = suite;
  report.config = cfg;
  if (report.config.golden.empty()) report.config.golden = default_golden_path();
  std::string golden_text;
  if (suite == "all" || suite == "moser") golden_text = read_file(report.config.golden);

  std::vector<std::string> parts;
  if (suite == "all")
    parts = {"moser", "heisenberg", "conformal", "sphere"};
  else
    parts = {suite};
  std::vector<std::future<CheckList>> jobs;
  for (const auto& p : parts)
    jobs.push_back(std::async(std::launch::async, [&, p] { return run_one(p, report.config, golden_text); }));
  for (auto& j : jobs) {
    CheckList part = j.get();
    report.checks.insert(report.checks.end(), part.begin(), part.end());
  }
  sort_checks(report.checks);
  return report;
}

}  // namespace crprime::tools
