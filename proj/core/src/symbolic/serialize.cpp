#include "crprime/symbolic/serialize.hpp"

#include <json.hpp>
#include <stdexcept>

namespace crprime {

using nlohmann::json;

namespace {

json coef_json(const GaussRational& c) {
  return json::array({c.re().get_num().get_str(), c.re().get_den().get_str(), c.im().get_num().get_str(),
                      c.im().get_den().get_str()});
}

mpz_class int_part(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  throw std::invalid_argument("coefficient entry must be an integer or a decimal string");
}

GaussRational coef_parse(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("coefficient must have 4 entries");
  mpz_class re_den = int_part(j[1]), im_den = int_part(j[3]);
  if (re_den == 0 || im_den == 0) throw std::invalid_argument("coefficient denominator is zero");
  mpq_class re(int_part(j[0]), re_den);
  mpq_class im(int_part(j[2]), im_den);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

json terms_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    const auto& e = m.exps();
    bool triple = true;
    for (int k = 3; k < kNumVars; ++k) triple = triple && e[k] == 0;
    json exps = json::array();
    for (int k = 0; k < (triple ? 3 : kNumVars); ++k) exps.push_back(e[k]);
    terms.push_back({{"exp", exps}, {"coef", coef_json(c)}});
  }
  return terms;
}

Poly terms_parse(const json& terms) {
  if (!terms.is_array()) throw std::invalid_argument("term list must be an array");
  Poly p;
  for (const auto& t : terms) {
    const auto& exps = t.at("exp");
    if (exps.size() != 3 && exps.size() != static_cast<std::size_t>(kNumVars))
      throw std::invalid_argument("exponent must have 3 or 7 entries");
    Monomial::Exps e{};
    for (std::size_t k = 0; k < exps.size(); ++k) {
      int x = exps[k].get<int>();
      if (x < 0) throw std::invalid_argument("negative exponent");
      e[k] = static_cast<std::uint16_t>(x);
    }
    p.add_term(Monomial(e), coef_parse(t.at("coef")));
  }
  return p;
}

// Reports malformed JSON as std::invalid_argument, like every other parse error.
template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("serialize: ") + e.what());
  }
}

}  // namespace

std::string coef_to_json(const GaussRational& c) { return coef_json(c).dump(); }
GaussRational coef_from_json(const std::string& text) {
  return guarded([&] { return coef_parse(json::parse(text)); });
}

std::string poly_to_json(const Poly& p) { return terms_json(p).dump(); }
Poly poly_from_json(const std::string& text) {
  return guarded([&] { return terms_parse(json::parse(text)); });
}

std::string series_to_json(const GradedSeries& s) {
  json j;
  j["terms"] = terms_json(s.poly());
  j["error_order"] = s.is_exact() ? json(nullptr) : json(s.error_order());
  return j.dump();
}

GradedSeries series_from_json(const std::string& text) {
  return guarded([&] {
    json j = json::parse(text);
    Poly p = terms_parse(j.at("terms"));
    const auto& e = j.at("error_order");
    return GradedSeries(p, e.is_null() ? GradedSeries::kExact : e.get<int>());
  });
}

}  // namespace crprime
