#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "crprime/sphere/sphere.hpp"

using namespace crprime;
using namespace crprime::vars;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(SphereChart, ConstantCurvature) {
  const auto& c = sphere_structure_in_chart();
  EXPECT_TRUE((c.st.r - LogExpr(2)).is_zero()) << c.st.r;
  EXPECT_TRUE(c.st.torsion.is_zero());
  EXPECT_TRUE((c.q_prime - LogExpr(4)).is_zero()) << c.q_prime;
}

TEST(Quadrature, ConfigValidation) {
  QuadratureConfig cfg;
  cfg.radial = 3;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.radial_scale = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

// int exp(-|z|^2 - u^2) dx dy du = pi^{3/2}.
TEST(Quadrature, GaussianOracle) {
  auto f = [](double x, double y, double u) { return std::exp(-(x * x + y * y) - u * u); };
  QuadratureConfig cfg;
  auto r = integrate_with_error(f, cfg);
  double exact = kPi * std::sqrt(kPi);
  EXPECT_NEAR(r.value / exact, 1.0, 1e-6) << r.value << " err " << r.error;
  EXPECT_LE(std::abs(r.value - exact), r.error);
}

// int dx dy du / q^2 over the chart is pi^2 / 4, so int Q' theta ^ d theta = 4 * 16 * pi^2 / 4.
TEST(Quadrature, TotalQPrime) {
  auto r = total_q_prime();
  EXPECT_NEAR(r.value / (16 * kPi * kPi), 1.0, 1e-6) << r.value << " err " << r.error;
  EXPECT_LT(r.error, 1e-6 * 16 * kPi * kPi);
}

TEST(Integrand, UndeclaredPoleRejected) {
  EXPECT_THROW(ChartIntegrand::compile(LogExpr(RatFunc::fraction(Poly(1), s()))), std::invalid_argument);
  EXPECT_NO_THROW(ChartIntegrand::compile(LogExpr(RatFunc::fraction(Poly(1), s())), 2));
}

TEST(Integrand, ProbeAgreement) {
  RatFunc e = RatFunc::fraction(Poly(1), Poly(2) * pi() * s());
  auto f = ChartIntegrand::compile(LogExpr(e), 2);
  auto p = rational_probe(mpq_class(1, 2), mpq_class(3, 4), mpq_class(2, 3));
  // s is rational at the probe.
  double a = mpq_class(p.x * p.x + p.y * p.y).get_d();
  EXPECT_NEAR(std::sqrt(a * a + p.u.get_d() * p.u.get_d()), p.s.get_d(), 1e-14);
  std::complex<double> exact = exact_eval(e, p.x, p.y, p.u, p.s);
  EXPECT_NEAR(f(p.x.get_d(), p.y.get_d(), p.u.get_d()) / exact.real(), 1.0, 1e-12);
}

TEST(Delta, GreenHarmonicOffPole) {
  // L of G itself vanishes; check the closed-form Laplacian of a profile against finite differences.
  auto b = bump_profiles().front();
  double x = 0.3, u = 0.2, h = 1e-4, o[4], p[4], m[4];
  b.eval(x, u, o);
  b.eval(x + h, u, p);
  b.eval(x - h, u, m);
  EXPECT_NEAR(o[1], (p[0] - m[0]) / (2 * h), 1e-6);
  EXPECT_NEAR(o[2], (p[0] - 2 * o[0] + m[0]) / (h * h), 1e-4);
}

TEST(SphereSuite, AllChecks) {
  SphereSuiteConfig cfg;
  for (const auto& c : sphere_suite(cfg)) {
    EXPECT_NE(c.status, Status::Fail) << c.id << " " << c.residual << " " << c.detail;
  }
}
