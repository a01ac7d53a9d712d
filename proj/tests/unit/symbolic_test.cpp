#include <gtest/gtest.h>

#include <random>

#include "crprime/symbolic/gauss_rational.hpp"
#include "crprime/symbolic/poly.hpp"
#include "crprime/symbolic/rational.hpp"

using namespace crprime;
using namespace crprime::vars;

namespace {

PointValue sample_point(std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-1.2, 1.2);
  return PointValue::physical({d(rng), d(rng)}, d(rng), d(rng));
}

}  // namespace

TEST(GaussRational, FieldOperations) {
  GaussRational a(3, 4, -1, 2);
  GaussRational b(2, 1, 5, 3);
  EXPECT_EQ(a * a.inverse(), GaussRational(1));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(a.conj().conj(), a);
  EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  EXPECT_EQ(GaussRational::i() * GaussRational::i(), GaussRational(-1));
  EXPECT_EQ(a * a.conj(), GaussRational(a.norm(), 0));
  EXPECT_THROW(GaussRational(0).inverse(), std::domain_error);
}

TEST(Poly, WeightsAndConjugation) {
  Poly p = z() * zb() + i() * u() + pow(z(), 3);
  EXPECT_EQ(p.min_weight(), 2);
  EXPECT_EQ(p.max_weight(), 3);
  EXPECT_EQ(zeta().conj(), zeta_bar());
  EXPECT_EQ(p.conj().conj(), p);
  EXPECT_EQ(p.homogeneous_part(2), z() * zb() + i() * u());
}

TEST(Poly, DerivativesOfZeta) {
  EXPECT_EQ(zeta().diff(Var::Z), zb());
  EXPECT_EQ(zeta().diff(Var::U), -i());
}

TEST(Poly, ExactDivision) {
  Poly a = zeta() * (z() + u() * u() + GaussRational(3));
  auto q = a.divide_exact(zeta());
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, z() + u() * u() + GaussRational(3));
  EXPECT_FALSE((a + Poly(1)).divide_exact(zeta()).has_value());
}

TEST(Poly, ReduceS) {
  Poly p = s() * s() - pow(z() * zb(), 2) - u() * u();
  EXPECT_TRUE(p.reduce_s().is_zero());
  EXPECT_TRUE((zeta() * zeta_bar() - s() * s()).reduce_s().is_zero());
}

TEST(RatFunc, ArithmeticMatchesNumericEvaluation) {
  std::mt19937 rng(7);
  RatFunc a = RatFunc::fraction(z() + Poly(2), zeta());
  RatFunc b = RatFunc::fraction(u() * s(), Poly(1) + z() * zb());
  RatFunc c = RatFunc(s()) + RatFunc(Poly(3));
  for (int k = 0; k < 5; ++k) {
    PointValue p = sample_point(rng);
    auto va = a.eval(p), vb = b.eval(p), vc = c.eval(p);
    EXPECT_NEAR(std::abs((a + b).eval(p) - (va + vb)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs((a * b).eval(p) - va * vb), 0.0, 1e-10);
    EXPECT_NEAR(std::abs((a / c).eval(p) - va / vc), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(c.inverse().eval(p) - 1.0 / vc), 0.0, 1e-10);
  }
}

TEST(RatFunc, ExactIdentities) {
  RatFunc a = RatFunc::fraction(z() + Poly(2), zeta());
  RatFunc c = RatFunc(s()) + RatFunc(Poly(3));
  EXPECT_TRUE((a * a.inverse() - RatFunc(1)).is_zero());
  EXPECT_TRUE((c * c.inverse() - RatFunc(1)).is_zero());
  EXPECT_TRUE((a - a).is_zero());
  // s^2 = zeta * zeta-bar.
  EXPECT_EQ(RatFunc(s()) * RatFunc(s()), RatFunc(zeta() * zeta_bar()));
  EXPECT_EQ(RatFunc(s()).inverse(), RatFunc::with_denominator(s(), {{zeta(), 1}, {zeta_bar(), 1}}));
}

TEST(RatFunc, DerivativeMatchesFiniteDifference) {
  std::mt19937 rng(11);
  RatFunc f = RatFunc::fraction(z() * s() + u(), Poly(1) + zeta() * zb());
  const double h = 1e-6;
  for (int k = 0; k < 4; ++k) {
    PointValue p = sample_point(rng);
    PointValue pu = p, pm = p;
    pu.u += h;
    pm.u -= h;
    auto fd = (f.eval(pu) - f.eval(pm)) / (2 * h);
    EXPECT_NEAR(std::abs(f.diff(Var::U).eval(p) - fd), 0.0, 1e-6);
    // d/dz at fixed zb: perturb z and zb independently.
    PointValue pz = p, pzm = p;
    pz.z += h;
    pzm.z -= h;
    auto fdz = (f.eval(pz) - f.eval(pzm)) / (2 * h);
    EXPECT_NEAR(std::abs(f.diff(Var::Z).eval(p) - fdz), 0.0, 1e-6);
  }
}

TEST(RatFunc, ConjugationAndReality) {
  RatFunc r = RatFunc::fraction(Poly(1), zeta()) + RatFunc::fraction(Poly(1), zeta_bar());
  EXPECT_TRUE(r.is_real());
  RatFunc w = RatFunc::fraction(i(), zeta());
  EXPECT_FALSE(w.is_real());
  EXPECT_EQ(w.conj(), RatFunc::fraction(-i(), zeta_bar()));
}
