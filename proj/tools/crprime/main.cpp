#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "crprime_tools/config.hpp"
#include "crprime_tools/expand.hpp"
#include "crprime_tools/report.hpp"
#include "crprime_tools/runner.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using crprime::tools::RunConfig;

struct Overrides {
  std::string config_file;
  int order = 0;
  double tol = 0;
  int grid = 0;
  std::uint64_t seed = 0;
  std::string format;
  std::string golden;
  int green_power = 0;
  bool perturb_weight4 = false;
  bool timings = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_file, "key = value configuration file")->check(CLI::ExistingFile);
  cmd->add_option("--order", o.order, "Moser truncation order (6-16)");
  cmd->add_option("--seed", o.seed, "seed for randomized instances and probe points");
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--golden", o.golden, "golden expansion file");
  cmd->add_flag("--perturb-weight4", o.perturb_weight4, "negative control: add a z^2 zb^2 term to E");
}

// Defaults, then the config file, then explicit command-line options.
RunConfig resolve(const CLI::App* cmd, const Overrides& o) {
  RunConfig cfg;
  if (!o.config_file.empty()) {
    std::ifstream in(o.config_file);
    std::stringstream ss;
    ss << in.rdbuf();
    crprime::tools::apply_key_values(cfg, crprime::tools::parse_key_values(ss.str()));
  }
  auto given = [&](const char* name) { return cmd->get_option_no_throw(name) && cmd->count(name) > 0; };
  if (given("--order")) cfg.order = o.order;
  if (given("--tol")) cfg.tol = o.tol;
  if (given("--grid")) cfg.grid = o.grid;
  if (given("--seed")) cfg.seed = o.seed;
  if (given("--format")) cfg.format = o.format;
  if (given("--golden")) cfg.golden = o.golden;
  if (given("--green-power")) cfg.green_power = o.green_power;
  if (given("--perturb-weight4")) cfg.perturb_weight4 = o.perturb_weight4;
  if (given("--timings")) cfg.timings = o.timings;
  crprime::tools::validate(cfg);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crprime: verification driver for the Q'-curvature computations"};
  app.require_subcommand(1);

  Overrides run_opts;
  std::string suite;
  auto* run = app.add_subcommand("run", "run a verification suite");
  run->add_option("suite", suite, "suite to run")
      ->required()
      ->check(CLI::IsMember(crprime::tools::suite_names()));
  add_common(run, run_opts);
  run->add_option("--tol", run_opts.tol, "tolerance for numerical checks");
  run->add_option("--grid", run_opts.grid, "base radial node count of the chart quadrature");
  run->add_option("--green-power", run_opts.green_power, "negative control: power of rho^2 in the Green's function");
  run->add_flag("--timings", run_opts.timings, "include per-check runtimes");

  Overrides expand_opts;
  std::string quantity;
  std::string instance = "generic";
  auto* exp = app.add_subcommand("expand", "print a series or closed form");
  exp->add_option("quantity", quantity, "quantity to expand")
      ->required()
      ->check(CLI::IsMember(crprime::tools::expand_quantities()));
  exp->add_option("--instance", instance, "Moser data instance")
      ->check(CLI::IsMember(crprime::tools::expand_instances()));
  add_common(exp, expand_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  RunConfig cfg;
  try {
    cfg = resolve(run->parsed() ? run : exp, run->parsed() ? run_opts : expand_opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "crprime: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (run->parsed()) {
      auto report = crprime::tools::run(suite, cfg);
      std::cout << (cfg.format == "json" ? crprime::tools::to_json(report) : crprime::tools::to_text(report));
      return report.passed() ? kExitPass : kExitFail;
    }
    auto e = crprime::tools::expand(quantity, instance, cfg);
    std::cout << (cfg.format == "json" ? crprime::tools::to_json(e) : crprime::tools::to_text(e));
    return kExitPass;
  } catch (const std::invalid_argument& e) {
    std::cerr << "crprime: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "crprime: " << e.what() << "\n";
    return kExitFail;
  }
}
