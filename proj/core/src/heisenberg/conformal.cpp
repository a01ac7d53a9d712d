#include "crprime/heisenberg/conformal.hpp"

#include "crprime/heisenberg/flat.hpp"

namespace crprime {

using namespace vars;

std::vector<Poly> conformal_battery() {
  return {Poly(1) + z() * zb(),
          Poly(1) + u() * u(),
          Poly(2) + z() + zb(),
          Poly(1) + z() * zb() + u() * u(),
          pow(Poly(1) + z() * zb(), 2) + u() * u(),
          Poly(2) + pow(z(), 2) * pow(zb(), 2) + u() * u()};
}

CheckList conformal_exact_checks(const Poly& f, const std::string& name) {
  static const auto flat = flat_structure<LogExpr>();
  const std::string base = "conformal:" + name;
  const std::string where = " for Y = log(" + f.to_string() + ")";
  LogExpr y = LogExpr::log(f);
  auto hat = conformal_change(flat, y);
  CheckList out;
  out.push_back(timed_check(base + ".q_prime_law", Provenance::Derived,
                            "e^{2Y} Q-hat' (re-solve) equals the Q' transformation law" + where, [&](CheckResult& c) {
                              LogExpr lhs = LogExpr(pow(RatFunc(f), 2)) * q_prime(hat);
                              expect_zero(c, lhs - qprime_conformal_rhs(flat, y));
                            }));
  out.push_back(timed_check(base + ".torsion_dual_path", Provenance::Derived,
                            "transformation law of torsion matches the re-solved torsion" + where,
                            [&](CheckResult& c) {
                              expect_zero(c, torsion_transform(flat, y).tensor_zz - torsion_tensor_zz(hat));
                            }));
  out.push_back(timed_check(base + ".residuals", Provenance::Derived, "structure equations of e^Y theta" + where,
                            [&](CheckResult& c) {
                              bool ok = structure_residuals(hat).all_zero();
                              c.status = ok ? Status::Pass : Status::Fail;
                              c.residual = ok ? "0" : "nonzero";
                            }));
  return out;
}

CheckList conformal_graded_checks(int order) {
  // Derivatives up to fourth order in the frame (d_u costs 2) plus products.
  const int precision = order + 8;
  auto flat = flat_structure<GradedSeries>();
  Poly yp = z() * zb() + GaussRational(1, 2, 0, 1) * (z() + zb()) * u() + GaussRational(0, 1, 1, 3) * (pow(z(), 3) - pow(zb(), 3)) +
            u() * u();
  GradedSeries y = GradedSeries::with_precision(yp, precision);
  CheckList out;
  out.push_back(timed_check("conformal:graded.q_prime_law", Provenance::Derived,
                            "Q' transformation law in graded arithmetic for Y = " + yp.to_string(),
                            [&](CheckResult& c) {
                              auto hat = conformal_change(flat, y);
                              GradedSeries lhs = (GradedSeries(2) * y).exp() * q_prime(hat);
                              GradedSeries diff = lhs - qprime_conformal_rhs(flat, y);
                              bool ok = diff.truncated(order).is_zero() && diff.error_order() >= order;
                              c.status = ok ? Status::Pass : Status::Fail;
                              c.residual = diff.truncated(order).to_string();
                              c.detail = "difference known to O(" + std::to_string(diff.error_order()) + ")";
                            }));
  return out;
}

CheckList conformal_suite(int graded_order) {
  CheckList out;
  const char* names[] = {"one_plus_zzb", "one_plus_u2", "two_plus_re_z", "one_plus_zzb_u2", "sphere_factor",
                         "two_plus_zzb2_u2"};
  auto battery = conformal_battery();
  for (std::size_t k = 0; k < battery.size(); ++k) {
    auto part = conformal_exact_checks(battery[k], names[k]);
    out.insert(out.end(), part.begin(), part.end());
  }
  auto graded = conformal_graded_checks(graded_order);
  out.insert(out.end(), graded.begin(), graded.end());
  return out;
}

}  // namespace crprime
