#include <json.hpp>
#include <algorithm>
#include <stdexcept>

#include "crprime/moser/moser.hpp"
#include "crprime/symbolic/serialize.hpp"

namespace crprime {

using nlohmann::json;

namespace {

std::array<int, 3> triple(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument(std::string("golden: ") + what + " needs 3 entries");
  std::array<int, 3> out{};
  for (int k = 0; k < 3; ++k) {
    out[k] = j[k].get<int>();
    if (out[k] < 0) throw std::invalid_argument(std::string("golden: negative entry in ") + what);
  }
  return out;
}

}  // namespace

GoldenFile parse_golden(const std::string& json_text) {
  GoldenFile file;
  try {
    json j = json::parse(json_text);
    file.version = j.at("version").get<int>();
    for (const auto& ex : j.at("expansions")) {
      GoldenExpansion g;
      g.id = ex.at("id").get<std::string>();
      g.quantity = ex.at("quantity").get<std::string>();
      g.remainder_order = ex.at("remainder_order").get<int>();
      for (const auto& t : ex.at("terms")) {
        GoldenTerm term;
        term.coef = coef_from_json(t.at("coef").dump());
        term.monomial = triple(t.at("monomial"), "monomial");
        if (t.contains("E") && !t.at("E").is_null()) term.e_derivative = triple(t.at("E"), "E");
        g.terms.push_back(term);
      }
      if (ex.contains("errata")) {
        for (const auto& t : ex.at("errata")) {
          GoldenErratum er;
          er.monomial = triple(t.at("monomial"), "monomial");
          if (t.contains("E") && !t.at("E").is_null()) er.e_derivative = triple(t.at("E"), "E");
          er.printed = coef_from_json(t.at("printed").dump());
          er.corrected = coef_from_json(t.at("corrected").dump());
          er.note = t.value("note", "");
          g.errata.push_back(er);
        }
      }
      file.expansions.push_back(std::move(g));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("golden: ") + e.what());
  }
  return file;
}

std::string golden_to_json(const GoldenFile& file) {
  json j;
  j["version"] = file.version;
  j["expansions"] = json::array();
  for (const auto& g : file.expansions) {
    json ex;
    ex["id"] = g.id;
    ex["quantity"] = g.quantity;
    ex["remainder_order"] = g.remainder_order;
    ex["terms"] = json::array();
    for (const auto& t : g.terms) {
      json term;
      term["coef"] = json::parse(coef_to_json(t.coef));
      term["monomial"] = t.monomial;
      term["E"] = t.e_derivative ? json(*t.e_derivative) : json(nullptr);
      ex["terms"].push_back(term);
    }
    if (!g.errata.empty()) {
      ex["errata"] = json::array();
      for (const auto& er : g.errata) {
        json t;
        t["monomial"] = er.monomial;
        t["E"] = er.e_derivative ? json(*er.e_derivative) : json(nullptr);
        t["printed"] = json::parse(coef_to_json(er.printed));
        t["corrected"] = json::parse(coef_to_json(er.corrected));
        t["note"] = er.note;
        ex["errata"].push_back(t);
      }
    }
    j["expansions"].push_back(ex);
  }
  return j.dump(2);
}

GoldenExpansion with_errata(const GoldenExpansion& g) {
  GoldenExpansion out = g;
  out.errata.clear();
  for (const auto& er : g.errata) {
    auto it = std::find_if(out.terms.begin(), out.terms.end(), [&](const GoldenTerm& t) {
      return t.monomial == er.monomial && t.e_derivative == er.e_derivative;
    });
    if (it == out.terms.end()) {
      if (!er.printed.is_zero()) throw std::invalid_argument("golden: erratum for " + g.id + " names a missing term");
      out.terms.push_back({er.corrected, er.monomial, er.e_derivative});
      continue;
    }
    if (!(it->coef == er.printed)) throw std::invalid_argument("golden: erratum for " + g.id + " disagrees with the printed coefficient");
    if (er.corrected.is_zero())
      out.terms.erase(it);
    else
      it->coef = er.corrected;
  }
  return out;
}

}  // namespace crprime
