#include <gtest/gtest.h>

#include "crprime/heisenberg/flat.hpp"
#include "crprime/structure/structure.hpp"

using namespace crprime;
using namespace crprime::vars;

namespace {

LogExpr L(const Poly& p) { return LogExpr(p); }

const PseudohermitianStructure<LogExpr>& flat() {
  static const auto st = flat_structure<LogExpr>();
  return st;
}

}  // namespace

TEST(FlatStructure, Invariants) {
  const auto& st = flat();
  EXPECT_TRUE((st.g - LogExpr(1)).is_zero());
  EXPECT_TRUE(st.gamma1.is_zero());
  EXPECT_TRUE(st.gamma1bar.is_zero());
  EXPECT_TRUE(st.gamma0.is_zero());
  EXPECT_TRUE(st.torsion.is_zero());
  EXPECT_TRUE(st.r.is_zero());
  EXPECT_TRUE((st.t[2] - LogExpr(2)).is_zero());
  EXPECT_TRUE(st.t[0].is_zero());
  EXPECT_TRUE((st.z1[2] - L(i() * zb())).is_zero());
  EXPECT_TRUE(structure_residuals(st).all_zero());
}

TEST(FlatStructure, SublaplacianOfLogRho) {
  const auto& st = flat();
  LogExpr log_rho = LogExpr::log_s() * LogExpr(GaussRational(1, 2, 0, 1));
  LogExpr expected = RatFunc::fraction(Poly(1), zeta()) + RatFunc::fraction(Poly(1), zeta_bar());
  expected *= GaussRational(1, 2, 0, 1);
  EXPECT_TRUE((sublaplacian(st, log_rho) - expected).is_zero());
}

TEST(ConformalLaw, QPrimeBattery) {
  const auto& st = flat();
  std::vector<Poly> factors{Poly(1) + z() * zb(), Poly(1) + u() * u(), Poly(2) + z() + zb()};
  for (const auto& f : factors) {
    LogExpr y = LogExpr::log(f);
    auto hat = conformal_change(st, y);
    EXPECT_TRUE(structure_residuals(hat).all_zero());
    LogExpr lhs = LogExpr(pow(RatFunc(f), 2)) * q_prime(hat);
    LogExpr rhs = qprime_conformal_rhs(st, y);
    EXPECT_TRUE((lhs - rhs).is_zero()) << f;
    auto tt = torsion_transform(st, y);
    EXPECT_TRUE((tt.tensor_zz - torsion_tensor_zz(hat)).is_zero()) << f;
  }
}

TEST(Sphere, ChartStructure) {
  const auto& st = flat();
  Poly q = pow(Poly(1) + z() * zb(), 2) + u() * u();
  LogExpr factor = RatFunc::fraction(Poly(4), q);
  auto sph = solve_structure(factor * st.theta);
  EXPECT_TRUE((sph.r - LogExpr(2)).is_zero()) << sph.r;
  EXPECT_TRUE(sph.torsion.is_zero()) << sph.torsion;
  EXPECT_TRUE((q_prime(sph) - LogExpr(4)).is_zero());
  EXPECT_TRUE(pseudo_einstein_tensor(sph).is_zero());
}
