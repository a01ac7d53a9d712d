#include <gtest/gtest.h>

#include <random>

#include "crprime/heisenberg/flat.hpp"

using namespace crprime;
using namespace crprime::vars;

namespace {

using Form = DifferentialForm<LogExpr>;
using Field = VectorField<LogExpr>;

Poly random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> coef(-4, 4), pick(0, degree);
  Poly p;
  for (int k = 0; k < 5; ++k) {
    int a = pick(rng), b = pick(rng), c = pick(rng) / 2;
    p += Poly(GaussRational(coef(rng), 1, coef(rng), 1)) * pow(z(), a) * pow(zb(), b) * pow(u(), c);
  }
  return p;
}

// Polynomial over a positive denominator, so quotient rules get exercised.
LogExpr random_scalar(std::mt19937& rng) {
  return LogExpr(RatFunc::fraction(random_poly(rng, 3), Poly(1) + z() * zb() + u() * u()));
}

Form random_form(std::mt19937& rng, int degree) {
  Form f(degree);
  for (unsigned m = 0; m < 8; ++m)
    if (std::popcount(m) == degree) f[m] = random_scalar(rng);
  return f;
}

Field random_field(std::mt19937& rng) { return {random_scalar(rng), random_scalar(rng), random_scalar(rng)}; }

Form sign(int s, const Form& f) { return s > 0 ? f : -f; }

}  // namespace

TEST(Exterior, FlatContactForm) {
  Form theta = flat_theta<LogExpr>();
  Form dtheta = exterior_d(theta);
  Form expected = LogExpr(GaussRational::i()) * Form::basis(mask::dz_dzb);
  EXPECT_TRUE((dtheta - expected).is_zero()) << dtheta.to_string();
  Form vol = wedge(theta, dtheta);
  ASSERT_EQ(vol.degree(), 3);
  // (i/2) dz ^ dzb ^ du = dx ^ dy ^ du.
  EXPECT_TRUE((vol[mask::vol] - LogExpr(GaussRational(0, 1, 1, 2))).is_zero()) << vol.to_string();
}

TEST(Exterior, DSquaredVanishes) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 4; ++trial) {
    for (int degree = 0; degree <= 1; ++degree) {
      Form f = random_form(rng, degree);
      EXPECT_TRUE(exterior_d(exterior_d(f)).is_zero()) << f.to_string();
    }
  }
}

TEST(Exterior, LeibnizRule) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 3; ++trial) {
    for (int da = 0; da <= 1; ++da) {
      Form a = random_form(rng, da), b = random_form(rng, 1);
      Form lhs = exterior_d(wedge(a, b));
      Form rhs = wedge(exterior_d(a), b) + sign(da % 2 ? -1 : 1, wedge(a, exterior_d(b)));
      EXPECT_TRUE((lhs - rhs).is_zero());
    }
  }
}

TEST(Exterior, GradedCommutativity) {
  std::mt19937 rng(13);
  Form a = random_form(rng, 1), b = random_form(rng, 1), w = random_form(rng, 2);
  EXPECT_TRUE((wedge(a, b) + wedge(b, a)).is_zero());
  EXPECT_TRUE(wedge(a, a).is_zero());
  EXPECT_TRUE((wedge(a, w) - wedge(w, a)).is_zero());
  EXPECT_TRUE(wedge(w, w).is_zero());
  EXPECT_EQ(wedge(w, w).degree(), 3);
}

TEST(Exterior, ConjugationCommutesWithD) {
  std::mt19937 rng(14);
  for (int degree = 0; degree <= 2; ++degree) {
    Form f = random_form(rng, degree);
    EXPECT_TRUE((exterior_d(f).conj() - exterior_d(f.conj())).is_zero()) << degree;
    EXPECT_TRUE((f.conj().conj() - f).is_zero());
  }
  // dz ^ dzb is imaginary: its conjugate is dzb ^ dz = -dz ^ dzb.
  EXPECT_TRUE((Form::basis(mask::dz_dzb).conj() + Form::basis(mask::dz_dzb)).is_zero());
}

TEST(Exterior, InteriorProductIsAntiderivation) {
  std::mt19937 rng(15);
  Form a = random_form(rng, 1), b = random_form(rng, 1);
  Field x = random_field(rng);
  Form lhs = interior(x, wedge(a, b));
  Form rhs = pair(a, x) * b - pair(b, x) * a;
  EXPECT_TRUE((lhs - rhs).is_zero());
  Field y = random_field(rng);
  LogExpr two = pair(wedge(a, b), x, y);
  EXPECT_TRUE((two - (pair(a, x) * pair(b, y) - pair(a, y) * pair(b, x))).is_zero());
}

TEST(Exterior, CartanFormulaOnFunctions) {
  std::mt19937 rng(16);
  Form f = random_form(rng, 0);
  Field x = random_field(rng);
  EXPECT_TRUE((pair(exterior_d(f), x) - x.apply(f[0])).is_zero());
}

TEST(Exterior, ReebFieldOfFlatForm) {
  Form theta = flat_theta<LogExpr>();
  Field t = reeb_field(theta);
  EXPECT_TRUE(t[0].is_zero());
  EXPECT_TRUE(t[1].is_zero());
  EXPECT_TRUE((t[2] - LogExpr(2)).is_zero());
  EXPECT_TRUE(interior(t, exterior_d(theta)).is_zero());
}

TEST(Exterior, ReebFieldOfScaledForm) {
  Form theta = LogExpr(Poly(1) + z() * zb()) * flat_theta<LogExpr>();
  Field t = reeb_field(theta);
  EXPECT_TRUE((pair(theta, t) - LogExpr(1)).is_zero());
  EXPECT_TRUE(interior(t, exterior_d(theta)).is_zero());
}

TEST(Exterior, ReebRequiresContactForm) {
  Form closed = Form::basis(mask::dz) + Form::basis(mask::dzb);
  EXPECT_THROW(reeb_field(closed), std::domain_error);
  EXPECT_THROW(reeb_field(Form::basis(mask::dz_dzb)), std::invalid_argument);
}

TEST(Exterior, CoframeExpandReassemble) {
  std::mt19937 rng(17);
  Form theta = flat_theta<LogExpr>();
  Form theta1 = Form::basis(mask::dz);
  auto cf = AdaptedCoframe<LogExpr>::from_forms(theta, theta1);
  auto c = cf.expand(Form::basis(mask::dz));
  EXPECT_TRUE((c[2] - LogExpr(1)).is_zero());
  EXPECT_TRUE(c[1].is_zero());
  EXPECT_TRUE(c[4].is_zero());
  for (int degree = 1; degree <= 3; ++degree) {
    Form f = random_form(rng, degree);
    EXPECT_TRUE((cf.reassemble(cf.expand(f), degree) - f).is_zero()) << degree;
  }
  // d theta = i theta^1 ^ theta^1bar on the flat model.
  auto dt = cf.expand(exterior_d(theta));
  EXPECT_TRUE((dt[6] - LogExpr(GaussRational::i())).is_zero());
  EXPECT_TRUE(dt[3].is_zero());
  EXPECT_TRUE(dt[5].is_zero());
}

TEST(Exterior, SingularCoframeRejected) {
  Form theta = Form::basis(mask::dz) + Form::basis(mask::dzb);
  EXPECT_THROW(AdaptedCoframe<LogExpr>::from_forms(theta, Form::basis(mask::dz) + Form::basis(mask::dzb)),
               std::domain_error);
}

TEST(Exterior, DegreeChecks) {
  EXPECT_THROW(Form(4), std::invalid_argument);
  Form one(1), two(2);
  EXPECT_THROW(one += two, std::invalid_argument);
  EXPECT_THROW(one[mask::dz_dzb], std::out_of_range);
}

TEST(Exterior, GradedSeriesForms) {
  // Same flat identities with truncated-series coefficients.
  using GForm = DifferentialForm<GradedSeries>;
  GForm theta = flat_theta<GradedSeries>();
  GForm dtheta = exterior_d(theta);
  EXPECT_TRUE((dtheta[mask::dz_dzb] - GradedSeries(GaussRational::i())).is_zero());
  EXPECT_TRUE(exterior_d(dtheta).is_zero());
}
