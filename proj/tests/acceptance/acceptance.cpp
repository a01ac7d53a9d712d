// Acceptance criteria 1-10. Usage: acceptance [N ...]; no arguments runs all.
// Prints one line per criterion and exits 0 iff every selected criterion passes.

#include <json.hpp>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "crprime/heisenberg/conformal.hpp"
#include "crprime/heisenberg/green.hpp"
#include "crprime/moser/moser.hpp"
#include "crprime/sphere/sphere.hpp"

using namespace crprime;

namespace {

// Pinned limits.
constexpr int kMoserOrder = 8;
constexpr double kMoserSeconds = 10.0;
constexpr double kHeisenbergSeconds = 5.0;
constexpr double kSphereSeconds = 60.0;
constexpr double kSphereRelTol = 1e-6;
constexpr double kProfileSpread = 5e-3;
constexpr int kMinBattery = 5;
constexpr int kGradedOrder = 8;
constexpr int kRandomInstances = 5;
constexpr int kFeffermanOrder = 4;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  std::function<Outcome()> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, const char* spec = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Every check must avoid `fail`; the listed ids must be `pass`.
Outcome require(const CheckList& checks, const std::vector<std::string>& must_pass) {
  std::map<std::string, Status> by_id;
  std::vector<std::string> bad;
  for (const auto& c : checks) {
    by_id[c.id] = c.status;
    if (c.status == Status::Fail) bad.push_back(c.id);
  }
  for (const auto& id : must_pass) {
    auto it = by_id.find(id);
    if (it == by_id.end())
      bad.push_back(id + " (missing)");
    else if (it->second != Status::Pass && it->second != Status::Fail)
      bad.push_back(id + " (not asserted)");
  }
  if (bad.empty()) return {true, std::to_string(checks.size()) + " checks"};
  std::string d = "failing:";
  for (const auto& b : bad) d += " " + b;
  return {false, d};
}

CheckList concat(std::initializer_list<CheckList> parts) {
  CheckList out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Outcome moser_golden() {
  auto t0 = std::chrono::steady_clock::now();
  GoldenFile file = parse_golden(read_file(CRPRIME_GOLDEN_FILE));
  MoserStructure ms = moser_structure(MoserData::generic(), kMoserOrder);
  bool ok = true;
  std::string d;
  for (const char* id : {"lambda", "torsion", "curvature", "pseudo_einstein"}) {
    auto g = std::find_if(file.expansions.begin(), file.expansions.end(),
                          [&](const GoldenExpansion& x) { return x.id == id; });
    if (g == file.expansions.end()) return {false, std::string("golden file lacks ") + id};
    bool printed = verify_expansion(ms, *g).pass;
    ok = ok && printed;
    d += std::string(id) + (printed ? " ok" : " MISMATCH");
    if (!printed && !g->errata.empty())
      d += verify_expansion(ms, with_errata(*g)).pass ? " (matches errata-corrected series)" : " (errata also differ)";
    d += ", ";
  }
  double t = seconds_since(t0);
  ok = ok && t < kMoserSeconds;
  return {ok, d + "order " + std::to_string(kMoserOrder) + ", " + fmt(t) + " s"};
}

Outcome chain() {
  std::string d;
  bool ok = true;
  for (int s = 1; s <= kRandomInstances; ++s) {
    bool zero = chain_restriction(moser_structure(MoserData::random(s, 2), kMoserOrder)).is_zero();
    ok = ok && zero;
    d += "seed" + std::to_string(s) + (zero ? " 0 " : " nonzero ");
  }
  return {ok, d};
}

Outcome fefferman() {
  std::string d;
  bool ok = true;
  for (int s = 1; s <= kRandomInstances; ++s) {
    int order = (fefferman_on_surface(MoserData::random(s, 2)) - GradedSeries(1)).vanishing_order();
    ok = ok && order >= kFeffermanOrder;
    d += "seed" + std::to_string(s) + " O(" + std::to_string(order) + ") ";
  }
  return {ok, d};
}

Outcome heisenberg_identities() {
  auto t0 = std::chrono::steady_clock::now();
  CheckList all = concat({frame_identities(), green_harmonicity(), p3_log_rho(), log_green_identity(1)});
  Outcome o = require(all, {"heisenberg:frame.z1bar_zeta", "heisenberg:frame.z1_log_rho4",
                            "heisenberg:frame.z1z1_log_rho4", "heisenberg:log_green.frame_identity", "heisenberg:p3.log_rho",
                            "heisenberg:green.harmonic"});
  double t = seconds_since(t0);
  o.pass = o.pass && t < kHeisenbergSeconds;
  o.detail += ", " + fmt(t) + " s";
  return o;
}

Outcome flat_equality() {
  return require(flat_torsion_of_hat(),
                 {"heisenberg:hat.torsion", "heisenberg:hat.curvature", "heisenberg:hat.dual_path",
                  "heisenberg:hat.torsion_transform"});
}

Outcome flat_closure() {
  return require(concat({szego_checks(), flat_closure_identity()}),
                 {"heisenberg:szego.closed_form", "heisenberg:szego.pluriharmonic", "heisenberg:closure.closure"});
}

Outcome conformal_law() {
  auto battery = conformal_battery();
  if (static_cast<int>(battery.size()) < kMinBattery) return {false, "battery too small"};
  CheckList all;
  std::vector<std::string> ids;
  for (std::size_t k = 0; k < battery.size(); ++k) {
    CheckList part = conformal_exact_checks(battery[k], "f" + std::to_string(k));
    all.insert(all.end(), part.begin(), part.end());
    ids.push_back("conformal:f" + std::to_string(k) + ".q_prime_law");
  }
  CheckList graded = conformal_graded_checks(kGradedOrder);
  all.insert(all.end(), graded.begin(), graded.end());
  ids.push_back("conformal:graded.q_prime_law");
  Outcome o = require(all, ids);
  o.detail = std::to_string(battery.size()) + " exact factors + graded order " + std::to_string(kGradedOrder) +
             ": " + o.detail;
  return o;
}

Outcome sphere_total() {
  auto t0 = std::chrono::steady_clock::now();
  const double expected = 16 * std::numbers::pi * std::numbers::pi;
  QuadratureConfig cfg;
  QuadratureResult base = total_q_prime(cfg);
  QuadratureResult finer = total_q_prime(cfg.doubled());
  double rel = std::abs(base.value - expected) / expected;
  double rel_fine = std::abs(finer.value - expected) / expected;
  double t = seconds_since(t0);
  bool ok = rel <= kSphereRelTol && base.error / expected <= kSphereRelTol && rel_fine <= kSphereRelTol &&
            finer.error <= base.error + 1e-12 * expected && t < kSphereSeconds;
  return {ok, "value " + fmt(base.value, "%.12f") + ", rel err " + fmt(rel) + ", doubling diff " +
                  fmt(base.error / expected) + " -> " + fmt(finer.error / expected) + ", " + fmt(t) + " s"};
}

Outcome delta_constant() {
  SphereSuiteConfig sc;
  std::vector<double> cs;
  std::string d;
  for (const auto& b : bump_profiles()) {
    double c = delta_normalization(b, sc.delta, 1.2 * b.support_rho).constant;
    cs.push_back(c);
    d += b.name + " " + fmt(c, "%.6f") + ", ";
  }
  if (cs.size() < 3) return {false, "fewer than 3 profiles"};
  auto [lo, hi] = std::minmax_element(cs.begin(), cs.end());
  double mean = 0;
  for (double c : cs) mean += c;
  mean /= static_cast<double>(cs.size());
  double spread = (*hi - *lo) / std::abs(mean);
  // The flat form has volume dx dy du; the expectation 16 belongs to 2 theta-circle,
  // for which L scales by 1/2 and the volume by 4.
  return {spread <= kProfileSpread, d + "spread " + fmt(spread) + "; for 2 theta-circle " + fmt(2 * mean, "%.6f") +
                                        " vs expected 16"};
}

struct Proc {
  int code = -1;
  std::string out;
};

Proc run_cli(const std::string& args) {
  std::string cmd = std::string(CRPRIME_EXE) + " " + args + " 2>/dev/null";
  Proc p;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), n);
  int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

std::string status_of(const std::string& json_text, const std::string& id) {
  try {
    auto report = nlohmann::json::parse(json_text);
    for (const auto& c : report["checks"])
      if (c["id"] == id) return c["status"];
  } catch (const nlohmann::json::exception&) {
  }
  return "missing";
}

Outcome negative_controls() {
  auto golden = nlohmann::json::parse(read_file(CRPRIME_GOLDEN_FILE));
  for (auto& ex : golden["expansions"])
    if (ex["id"] == "lambda") ex["terms"][0]["coef"] = {"0", "1", "3", "1"};
  auto path = (std::filesystem::temp_directory_path() / "crprime_acceptance_corrupt.json").string();
  std::ofstream(path) << golden.dump();

  struct Control {
    std::string name, args, target;
    std::string baseline_args;
  };
  std::vector<Control> controls{
      {"corrupted_golden", "run all --format json --golden " + path, "moser:golden.lambda", "run moser --format json"},
      {"green_power_2", "run heisenberg --format json --green-power 2", "heisenberg:log_green.frame_identity",
       "run heisenberg --format json"},
      {"weight4_perturbation", "run moser --format json --perturb-weight4", "moser:golden.curvature",
       "run moser --format json"},
  };
  bool ok = true;
  std::string d;
  for (const auto& c : controls) {
    Proc bad = run_cli(c.args);
    Proc base = run_cli(c.baseline_args);
    std::string before = status_of(base.out, c.target), after = status_of(bad.out, c.target);
    bool this_ok = bad.code != 0 && before == "pass" && after == "fail";
    ok = ok && this_ok;
    d += c.name + " exit " + std::to_string(bad.code) + " " + c.target + " " + before + "->" + after + ", ";
  }
  std::filesystem::remove(path);
  return {ok, d};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria{
      {1, "moser_golden_series", moser_golden},
      {2, "chain_pseudo_einstein", chain},
      {3, "fefferman_normalization", fefferman},
      {4, "heisenberg_identities", heisenberg_identities},
      {5, "flat_equality_case", flat_equality},
      {6, "flat_closure", flat_closure},
      {7, "conformal_q_prime_law", conformal_law},
      {8, "sphere_total_q_prime", sphere_total},
      {9, "delta_normalization", delta_constant},
      {10, "negative_controls", negative_controls},
  };
  std::set<int> selected;
  for (int k = 1; k < argc; ++k) {
    try {
      selected.insert(std::stoi(argv[k]));
    } catch (const std::exception&) {
      std::cerr << "usage: acceptance [criterion ...]\n";
      return 2;
    }
  }
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ',')) o.detail.pop_back();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << " " << c.name << ": " << o.detail
              << std::endl;
  }
  return all_pass ? 0 : 1;
}
