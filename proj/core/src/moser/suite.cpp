#include "crprime/moser/suite.hpp"

#include <algorithm>

namespace crprime {

using namespace vars;

namespace {

void from_bool(CheckResult& c, bool ok, const std::string& residual_if_bad = "nonzero") {
  c.status = ok ? Status::Pass : Status::Fail;
  c.residual = ok ? "0" : residual_if_bad;
}

std::string seed_tag(std::uint64_t seed) { return "seed" + std::to_string(seed); }

}  // namespace

Poly weight4_perturbation() { return (Poly(1) + u()) * pow(z(), 2) * pow(zb(), 2); }

CheckList moser_suite(const MoserSuiteConfig& cfg) {
  CheckList out;
  MoserData md = MoserData::generic();
  if (cfg.perturb_weight4) md.extra += weight4_perturbation();

  std::optional<GoldenFile> golden;
  out.push_back(timed_check("moser:golden.parse", Provenance::Trivial, "golden expansion file is well formed",
                            [&](CheckResult& c) {
                              golden = parse_golden(cfg.golden_json);
                              from_bool(c, !golden->expansions.empty(), "no expansions");
                            }));

  std::optional<MoserStructure> ms;
  out.push_back(timed_check("moser:structure.residuals", Provenance::Derived,
                            "structure equations of Moser's contact form", [&](CheckResult& c) {
                              ms = moser_structure(md, cfg.order);
                              from_bool(c, structure_residuals(ms->st).all_zero());
                              c.detail = "order " + std::to_string(ms->order) + ", working precision " +
                                         std::to_string(ms->precision);
                            }));
  if (!ms) return out;
  const auto& st = ms->st;

  if (golden) {
    for (const auto& g : golden->expansions) {
      out.push_back(timed_check("moser:golden." + g.id, Provenance::Paper,
                                "printed Moser-coordinate expansion of " + g.quantity + " + O(" +
                                    std::to_string(g.remainder_order) + ")",
                                [&](CheckResult& c) {
                                  auto check = verify_expansion(*ms, g);
                                  c.status = check.pass ? Status::Pass : Status::Fail;
                                  c.residual = check.pass ? "0" : check.difference.to_string();
                                  c.detail = check.pass ? "exact agreement" : check.detail.substr(0, 200);
                                  if (!check.pass && !g.errata.empty()) c.detail += "; see errata check";
                                }));
      if (g.errata.empty()) continue;
      out.push_back(timed_check("moser:golden." + g.id + ".errata", Provenance::Derived,
                                "printed expansion of " + g.quantity + " with documented coefficient corrections",
                                [&](CheckResult& c) {
                                  auto check = verify_expansion(*ms, with_errata(g));
                                  c.status = check.pass ? Status::Pass : Status::Fail;
                                  c.residual = check.pass ? "0" : check.difference.to_string();
                                  std::string notes;
                                  for (const auto& er : g.errata) notes += (notes.empty() ? "" : "; ") + er.note;
                                  c.detail = notes;
                                }));
    }
  }

  out.push_back(timed_check("moser:metric.formula", Provenance::Paper,
                            "g = 1 - E_zzb - lambda E_uzb - conj(lambda) E_uz - |lambda|^2 E_uu", [&](CheckResult& c) {
                              const GradedSeries& e = ms->e;
                              const GradedSeries& l = ms->lambda;
                              GradedSeries lb = l.conj();
                              GradedSeries eu = e.diff(Var::U);
                              GradedSeries g = GradedSeries(1) - e.diff(Var::Z).diff(Var::ZB) - l * eu.diff(Var::ZB) -
                                               lb * eu.diff(Var::Z) - l * lb * eu.diff(Var::U);
                              expect_zero(c, g - st.g);
                            }));
  out.push_back(timed_check("moser:metric.inverse", Provenance::Trivial, "g and g^{-1} are mutually inverse",
                            [&](CheckResult& c) { expect_zero(c, st.g * st.g_inv - GradedSeries(1)); }));
  out.push_back(timed_check("moser:torsion_from_a1", Provenance::Paper,
                            "A^1_1bar = i Z_1bar(a^1) with a_1 from the defining function", [&](CheckResult& c) {
                              GradedSeries a1bar = ms->a1.conj();
                              GradedSeries t = GradedSeries(GaussRational::i()) * st.z1bar().apply(st.g_inv * a1bar);
                              expect_zero(c, t - st.torsion);
                            }));
  out.push_back(timed_check("moser:connection_from_a1", Provenance::Paper, "Gamma_1bar = conj(a_1)",
                            [&](CheckResult& c) { expect_zero(c, st.gamma1bar - ms->a1.conj()); }));

  auto order_check = [&](const OrderClaim& oc) {
    std::string id = oc.id;
    std::replace(id.begin(), id.end(), ':', '.');
    return timed_check("moser:orders." + id, Provenance::Paper,
                       "printed weighted vanishing order O(" + std::to_string(oc.printed) + ")", [&](CheckResult& c) {
                         c.status = oc.pass() ? Status::Pass : Status::Fail;
                         c.residual = "measured O(" + std::to_string(oc.measured) + ")";
                         c.detail = "tracked to O(" + std::to_string(oc.tracked) + ")";
                       });
  };
  for (const auto& oc : order_pattern_structure(*ms)) out.push_back(order_check(oc));
  for (const auto& oc : order_pattern_sublaplacian(*ms)) out.push_back(order_check(oc));

  out.push_back(timed_check("moser:chain.generic", Provenance::Paper,
                            "pseudo-Einstein tensor vanishes along the chain z = 0",
                            [&](CheckResult& c) { expect_zero(c, chain_restriction(*ms)); }));
  for (std::uint64_t k = 0; k < 5; ++k) {
    std::uint64_t seed = cfg.seed + k;
    MoserData r = MoserData::random(seed, 2);
    if (cfg.perturb_weight4) r.extra += weight4_perturbation();
    out.push_back(timed_check("moser:chain." + seed_tag(seed), Provenance::Paper,
                              "pseudo-Einstein tensor vanishes along the chain z = 0 (random c42, c33 of degree 2)",
                              [&](CheckResult& c) {
                                expect_zero(c, chain_restriction(moser_structure(r, cfg.order)));
                              }));
    out.push_back(timed_check("moser:fefferman." + seed_tag(seed), Provenance::Paper,
                              "J[4^{1/3} r] = 1 + O(4)", [&](CheckResult& c) {
                                GradedSeries j = fefferman_on_surface(r) - GradedSeries(1);
                                int ord = j.vanishing_order();
                                c.status = ord >= 4 ? Status::Pass : Status::Fail;
                                c.residual = "vanishing order " + std::to_string(ord);
                              }));
  }
  out.push_back(timed_check("moser:fefferman.flat", Provenance::Derived, "J[4^{1/3} r] = 1 exactly for E = 0",
                            [&](CheckResult& c) {
                              expect_zero(c, fefferman_on_surface(MoserData::flat()) - GradedSeries(1));
                            }));
  out.push_back(timed_check("moser:fefferman.homogeneity", Provenance::Trivial, "J[c psi] = c^3 J[psi]",
                            [&](CheckResult& c) {
                              Poly r = defining_function(MoserData::random(cfg.seed, 2));
                              expect_zero(c, fefferman_j(r * GaussRational(2)) - fefferman_j(r) * GaussRational(8));
                            }));
  out.push_back(timed_check("moser:cartan", Provenance::Derived,
                            "coefficient of z in E_zzzzbzb is -48 c42", [&](CheckResult& c) {
                              Poly k = cartan_coefficient(md);
                              expect_zero(c, k + GaussRational(48) * md.c42);
                              c.detail = "proportionality to the Cartan tensor is not normalized";
                            }));
  out.push_back(timed_check("moser:perturbation_control", Provenance::Derived,
                            "a z^2 zb^2 term in E must break the curvature expansion", [&](CheckResult& c) {
                              if (!golden) throw std::runtime_error("no golden file");
                              MoserData bad = MoserData::random(cfg.seed, 2);
                              bad.extra += weight4_perturbation();
                              auto bms = moser_structure(bad, cfg.order);
                              for (const auto& g : golden->expansions)
                                if (g.id == "curvature") {
                                  auto check = verify_expansion(bms, g);
                                  c.status = check.pass ? Status::Fail : Status::Pass;
                                  c.residual = check.pass ? "0" : check.difference.to_string();
                                  c.detail = "chain restriction " + chain_restriction(bms).to_string();
                                  return;
                                }
                              throw std::runtime_error("golden file lacks the curvature expansion");
                            }));
  return out;
}

}  // namespace crprime
