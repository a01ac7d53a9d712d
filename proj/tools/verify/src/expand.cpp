#include "crprime_tools/expand.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "crprime/heisenberg/green.hpp"
#include "crprime/moser/suite.hpp"
#include "crprime/symbolic/serialize.hpp"
#include "crprime_tools/runner.hpp"

namespace crprime::tools {

using nlohmann::ordered_json;

namespace {

// quantity name on the command line -> (moser_quantity name, golden id)
const std::map<std::string, std::pair<std::string, std::string>>& quantity_table() {
  static const std::map<std::string, std::pair<std::string, std::string>> t{
      {"R", {"R", "curvature"}},
      {"A", {"A", "torsion"}},
      {"g", {"g", ""}},
      {"lambda", {"lambda", "lambda"}},
      {"pe_tensor", {"pe_tensor", "pseudo_einstein"}},
  };
  return t;
}

std::string power(const char* var, int k) {
  if (k == 0) return "";
  return k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k);
}

std::string format_term(const GoldenTerm& t) {
  std::string factors;
  auto add = [&](const std::string& f) {
    if (f.empty()) return;
    if (!factors.empty()) factors += " ";
    factors += f;
  };
  add(power("z", t.monomial[0]));
  add(power("zb", t.monomial[1]));
  add(power("u", t.monomial[2]));
  if (t.e_derivative) {
    const auto& d = *t.e_derivative;
    std::string sub = std::string(d[0], 'z');
    for (int k = 0; k < d[1]; ++k) sub += "zb";
    sub += std::string(d[2], 'u');
    add(sub.empty() ? "E" : "E_" + sub);
  }
  std::string c = t.coef.to_string();
  if (factors.empty()) return c;
  if (c == "1") return factors;
  if (c == "-1") return "-" + factors;
  if (c.find_first_of("+-", 1) != std::string::npos) c = "(" + c + ")";
  return c + " " + factors;
}

std::string format_golden(const GoldenExpansion& g) {
  std::string out;
  for (const auto& t : g.terms) {
    std::string s = format_term(t);
    if (out.empty())
      out = s;
    else if (s[0] == '-')
      out += " - " + s.substr(1);
    else
      out += " + " + s;
  }
  if (out.empty()) out = "0";
  return out + " + O(" + std::to_string(g.remainder_order) + ")";
}

MoserData instance_data(const std::string& instance, std::uint64_t seed) {
  if (instance == "generic") return MoserData::generic();
  if (instance == "flat") return MoserData::flat();
  if (instance == "random") return MoserData::random(seed, 2);
  throw std::invalid_argument("unknown instance '" + instance + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read golden file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

const std::vector<std::string>& expand_quantities() {
  static const std::vector<std::string> q{"R", "A", "g", "lambda", "pe_tensor", "szego"};
  return q;
}

const std::vector<std::string>& expand_instances() {
  static const std::vector<std::string> i{"generic", "flat", "random"};
  return i;
}

Expansion expand(const std::string& quantity, const std::string& instance, const RunConfig& cfg) {
  validate(cfg);
  Expansion e;
  e.quantity = quantity;
  e.instance = instance;
  e.order = cfg.order;
  if (quantity == "szego") {
    e.instance = "heisenberg";
    LogExpr k = szego_candidate();
    e.printed = "16 Re((|z|^2 - i u)^-2)";
    e.engine = k.to_string();
    e.agrees_with = (k - szego_closed_form()).is_zero() ? "closed_form" : "none";
    ordered_json j;
    j["closed_form"] = szego_closed_form().to_string();
    j["engine"] = e.engine;
    e.json_terms = j.dump();
    return e;
  }
  auto it = quantity_table().find(quantity);
  if (it == quantity_table().end()) throw std::invalid_argument("unknown quantity '" + quantity + "'");
  const auto& [name, golden_id] = it->second;

  MoserData md = instance_data(instance, cfg.seed);
  if (cfg.perturb_weight4) md.extra += weight4_perturbation();
  MoserStructure ms = moser_structure(md, cfg.order);
  GradedSeries series = moser_quantity(ms, name).truncated(cfg.order);
  e.engine = series.to_string();
  e.json_terms = poly_to_json(series.poly());

  if (golden_id.empty()) {
    e.printed = "1 - E_zzb - lambda E_zbu - conj(lambda) E_zu - |lambda|^2 E_uu";
    e.agrees_with = "printed";
    return e;
  }
  std::string path = cfg.golden.empty() ? default_golden_path() : cfg.golden;
  GoldenFile file = parse_golden(read_file(path));
  auto g = std::find_if(file.expansions.begin(), file.expansions.end(),
                        [&](const GoldenExpansion& x) { return x.id == golden_id; });
  if (g == file.expansions.end()) throw std::invalid_argument("golden file lacks '" + golden_id + "'");
  e.printed = format_golden(*g);
  e.agrees_with = "none";
  if (verify_expansion(ms, *g).pass) e.agrees_with = "printed";
  if (!g->errata.empty()) {
    GoldenExpansion fixed = with_errata(*g);
    e.corrected = format_golden(fixed);
    if (e.agrees_with == "none" && verify_expansion(ms, fixed).pass) e.agrees_with = "corrected";
  }
  return e;
}

std::string to_text(const Expansion& e) {
  std::ostringstream out;
  out << "quantity:  " << e.quantity << "\n";
  out << "instance:  " << e.instance << "\n";
  if (e.quantity != "szego") out << "order:     " << e.order << "\n";
  out << "printed:   " << e.printed << "\n";
  if (!e.corrected.empty()) out << "corrected: " << e.corrected << "\n";
  out << "engine:    " << e.engine << "\n";
  out << "agrees:    " << e.agrees_with << "\n";
  return out.str();
}

std::string to_json(const Expansion& e) {
  ordered_json j;
  j["quantity"] = e.quantity;
  j["instance"] = e.instance;
  j["order"] = e.order;
  j["printed"] = e.printed;
  if (!e.corrected.empty()) j["corrected"] = e.corrected;
  j["engine"] = e.engine;
  j["agrees_with"] = e.agrees_with;
  j["terms"] = ordered_json::parse(e.json_terms);
  return j.dump(2) + "\n";
}

}  // namespace crprime::tools
