#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "crprime/moser/moser.hpp"

using namespace crprime;
using namespace crprime::vars;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const GoldenFile& golden() {
  static const GoldenFile g = parse_golden(read_file(CRPRIME_GOLDEN_FILE));
  return g;
}

const MoserStructure& generic_structure() {
  static const MoserStructure ms = moser_structure(MoserData::generic(), 8);
  return ms;
}

const GoldenExpansion& expansion(const std::string& id) {
  for (const auto& g : golden().expansions)
    if (g.id == id) return g;
  throw std::runtime_error("missing expansion " + id);
}

}  // namespace

TEST(MoserData, RealityAndValidation) {
  MoserData md = MoserData::generic();
  EXPECT_TRUE(md.e().is_real());
  EXPECT_TRUE(defining_function(md).is_real());
  EXPECT_NO_THROW(md.validate());
  MoserData bad = md;
  bad.c33 = Poly(GaussRational::i());
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_EQ(defining_function(MoserData::flat()), v() - z() * zb());
  EXPECT_THROW(moser_structure(md, 5), std::invalid_argument);
}

TEST(MoserGolden, UncorrectedExpansionsMatchPrinted) {
  const auto& ms = generic_structure();
  for (const auto& g : golden().expansions) {
    if (!g.errata.empty()) continue;
    auto check = verify_expansion(ms, g);
    EXPECT_TRUE(check.pass) << g.id << ": " << check.detail;
    EXPECT_GE(check.engine_error_order, g.remainder_order);
  }
}

TEST(MoserGolden, TorsionSignErratum) {
  const auto& ms = generic_structure();
  for (const char* id : {"torsion", "pseudo_einstein"}) {
    const auto& g = expansion(id);
    ASSERT_FALSE(g.errata.empty()) << id;
    EXPECT_FALSE(verify_expansion(ms, g).pass) << id;
    auto fixed = verify_expansion(ms, with_errata(g));
    EXPECT_TRUE(fixed.pass) << id << ": " << fixed.detail;
  }
}

TEST(MoserGolden, ErrataMustMatchPrintedTerms) {
  GoldenExpansion g = expansion("torsion");
  g.errata[0].printed = GaussRational(7);
  EXPECT_THROW(with_errata(g), std::invalid_argument);
}

TEST(MoserGolden, RoundTrip) {
  GoldenFile again = parse_golden(golden_to_json(golden()));
  ASSERT_EQ(again.expansions.size(), golden().expansions.size());
  for (std::size_t k = 0; k < again.expansions.size(); ++k) {
    EXPECT_EQ(again.expansions[k].terms.size(), golden().expansions[k].terms.size());
    EXPECT_EQ(again.expansions[k].errata.size(), golden().expansions[k].errata.size());
  }
  EXPECT_THROW(parse_golden("{\"version\": 1}"), std::invalid_argument);
  EXPECT_THROW(parse_golden("not json"), std::invalid_argument);
}

TEST(MoserGolden, CorruptedCoefficientFails) {
  GoldenExpansion g = expansion("curvature");
  g.terms[0].coef = g.terms[0].coef + GaussRational(1);
  EXPECT_FALSE(verify_expansion(generic_structure(), g).pass);
}

// Torsion as i Z1bar(a^1) and the connection coefficient as conj(a_1),
// with a_1 taken from the defining function instead of the coframe.
TEST(MoserStructure, TorsionFromA1) {
  const auto& ms = generic_structure();
  const auto& st = ms.st;
  GradedSeries a1bar = ms.a1.conj();
  GradedSeries torsion = GradedSeries(GaussRational::i()) * st.z1bar().apply(st.g_inv * a1bar);
  EXPECT_TRUE((torsion - st.torsion).is_zero()) << (torsion - st.torsion).to_string();
  EXPECT_TRUE((st.gamma1bar - a1bar).is_zero()) << (st.gamma1bar - a1bar).to_string();
}

TEST(MoserStructure, ResidualsVanish) {
  EXPECT_TRUE(structure_residuals(generic_structure().st).all_zero());
}

TEST(MoserStructure, FlatInstanceIsHeisenberg) {
  auto ms = moser_structure(MoserData::flat(), 8);
  EXPECT_TRUE(ms.st.torsion.is_zero());
  EXPECT_TRUE(ms.st.r.is_zero());
  EXPECT_TRUE((ms.st.g - GradedSeries(1)).is_zero());
  EXPECT_TRUE((ms.lambda - GradedSeries(i() * zb())).is_zero());
}

TEST(MoserOrders, CoframePattern) {
  for (const auto& c : order_pattern_structure(generic_structure())) {
    if (c.id == "coframe:omega.dzb") {
      // conj(a_1) already enters at weight 3.
      EXPECT_EQ(c.measured, 3);
      continue;
    }
    EXPECT_TRUE(c.pass()) << c.id << " measured " << c.measured << " tracked " << c.tracked;
  }
}

TEST(MoserOrders, SublaplacianPattern) {
  for (const auto& c : order_pattern_sublaplacian(generic_structure())) {
    if (c.id == "sublaplacian:Z1" || c.id == "sublaplacian:Z1bar") {
      EXPECT_EQ(c.measured, 3) << c.id;
      continue;
    }
    EXPECT_TRUE(c.pass()) << c.id << " measured " << c.measured << " tracked " << c.tracked;
  }
}

TEST(MoserChain, PseudoEinsteinVanishesOnChain) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto ms = moser_structure(MoserData::random(seed, 2), 8);
    GradedSeries chain = chain_restriction(ms);
    EXPECT_TRUE(chain.is_zero()) << "seed " << seed << ": " << chain.to_string();
    EXPECT_GE(chain.error_order(), 2);
  }
}

TEST(MoserGolden, WeightFourPerturbationDetected) {
  MoserData md = MoserData::random(3, 2);
  md.extra = (Poly(1) + u()) * pow(z(), 2) * pow(zb(), 2);
  auto ms = moser_structure(md, 8);
  // Every term of E has even z-charge, so the chain restriction stays zero;
  // the expansions are what notice the perturbation.
  EXPECT_TRUE(chain_restriction(ms).is_zero());
  EXPECT_FALSE(verify_expansion(ms, expansion("curvature")).pass);
}

TEST(MoserCartan, LeadingCoefficient) {
  MoserData md = MoserData::random(11, 2);
  EXPECT_EQ(cartan_coefficient(md), GaussRational(-48) * md.c42);
}

TEST(Fefferman, FlatIsOne) {
  EXPECT_EQ(fefferman_on_surface(MoserData::flat()).poly(), Poly(1));
}

TEST(Fefferman, HomogeneityDegreeThree) {
  Poly r = defining_function(MoserData::random(5, 2));
  EXPECT_EQ(fefferman_j(r * GaussRational(2)), fefferman_j(r) * GaussRational(8));
}

TEST(Fefferman, VanishingOrderFour) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GradedSeries j = fefferman_on_surface(MoserData::random(seed, 2)) - GradedSeries(1);
    EXPECT_GE(j.vanishing_order(), 4) << "seed " << seed;
  }
  GradedSeries j = fefferman_on_surface(MoserData::generic()) - GradedSeries(1);
  EXPECT_GE(j.vanishing_order(), 4);
}
