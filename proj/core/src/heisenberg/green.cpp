#include "crprime/heisenberg/green.hpp"

#include <random>

namespace crprime {

using namespace vars;

namespace {

const GaussRational kHalf(1, 2, 0, 1);

LogExpr rat(const Poly& num, const Poly& den) { return LogExpr(RatFunc::fraction(num, den)); }

LogExpr z1(const LogExpr& f) { return FlatModel::get().st.z1.apply(f); }
LogExpr z1bar(const LogExpr& f) { return FlatModel::get().st.z1bar().apply(f); }


// z d_z + zb d_zb + 2 u d_u.
LogExpr euler(const LogExpr& f) {
  return LogExpr(z()) * f.diff(Var::Z) + LogExpr(zb()) * f.diff(Var::ZB) + LogExpr(Poly(2) * u()) * f.diff(Var::U);
}

}  // namespace

const FlatModel& FlatModel::get() {
  static const FlatModel m{flat_structure<LogExpr>(), flat_green(1), flat_log_green(1)};
  return m;
}

LogExpr flat_green(int power) { return rat(Poly(1), Poly(2) * pi() * pow(s(), power)); }

LogExpr flat_log_green(int power) {
  return -LogExpr::log(Poly(2) * pi()) - LogExpr::log_s() * LogExpr(GaussRational(power));
}

// 8 (zeta^-2 + zeta-bar^-2).
LogExpr szego_closed_form() {
  return rat(Poly(8), pow(zeta(), 2)) + rat(Poly(8), pow(zeta_bar(), 2));
}

LogExpr szego_candidate() { return p_prime(FlatModel::get().st, FlatModel::get().log_green); }

CheckList frame_identities() {
  CheckList out;
  LogExpr log_rho4 = LogExpr::log_s() * LogExpr(2);
  out.push_back(timed_check("heisenberg:frame.z1bar_zeta", Provenance::Paper,
                            "|z|^2 - iu is annihilated by the antiholomorphic flat frame",
                            [](CheckResult& c) { expect_zero(c, z1bar(LogExpr(zeta()))); }));
  out.push_back(timed_check("heisenberg:frame.z1_log_rho4", Provenance::Paper,
                            "Z1 log rho^4 = 2 zb / (|z|^2 - iu)", [&](CheckResult& c) {
                              expect_zero(c, z1(log_rho4) - rat(Poly(2) * zb(), zeta()));
                            }));
  out.push_back(timed_check("heisenberg:frame.z1z1_log_rho4", Provenance::Paper,
                            "Z1 Z1 log rho^4 = -(Z1 log rho^4)^2", [&](CheckResult& c) {
                              LogExpr d = z1(log_rho4);
                              expect_zero(c, z1(d) + d * d);
                            }));
  return out;
}

CheckList green_harmonicity() {
  const auto& m = FlatModel::get();
  CheckList out;
  out.push_back(timed_check("heisenberg:green.harmonic", Provenance::Paper,
                            "the flat Green's function is annihilated by the CR Laplacian away from the pole",
                            [&](CheckResult& c) { expect_zero(c, cr_laplacian(m.st, m.green)); }));
  out.push_back(timed_check("heisenberg:green.constant", Provenance::Trivial, "L(1) = R = 0 on the flat model",
                            [&](CheckResult& c) { expect_zero(c, cr_laplacian(m.st, LogExpr(1))); }));
  out.push_back(timed_check("heisenberg:green.log_control", Provenance::Derived,
                            "log rho^2 is not L-harmonic: L log s = -8 |z|^2 / rho^4", [&](CheckResult& c) {
                              LogExpr l = cr_laplacian(m.st, LogExpr::log_s());
                              LogExpr expected = rat(Poly(-8) * z() * zb(), zeta() * zeta_bar());
                              expect_nonzero(c, l);
                              if (!(l - expected).is_zero()) {
                                c.status = Status::Fail;
                                c.detail = "unexpected value " + l.to_string();
                              }
                            }));
  return out;
}

CheckList p3_log_rho() {
  const auto& st = FlatModel::get().st;
  CheckList out;
  LogExpr log_rho = LogExpr::log_s() * LogExpr(kHalf);
  LogExpr re_log_zeta = (LogExpr::log_zeta() + LogExpr::log_zeta_bar()) * LogExpr(kHalf);
  LogExpr im_log_zeta = (LogExpr::log_zeta() - LogExpr::log_zeta_bar()) * LogExpr(GaussRational(0, 1, -1, 2));
  out.push_back(timed_check("heisenberg:p3.log_rho", Provenance::Paper, "log rho is CR pluriharmonic: P3 log rho = 0",
                            [&](CheckResult& c) { expect_zero(c, p3_operator(st, log_rho)); }));
  out.push_back(timed_check("heisenberg:p3.re_log_zeta", Provenance::Paper,
                            "Re log(|z|^2 - iu) is CR pluriharmonic",
                            [&](CheckResult& c) { expect_zero(c, p3_operator(st, re_log_zeta)); }));
  out.push_back(timed_check("heisenberg:p3.im_log_zeta", Provenance::Derived, "P3 Im log(|z|^2 - iu) by composition",
                            [&](CheckResult& c) {
                              LogExpr p = p3_operator(st, im_log_zeta);
                              c.status = Status::Recorded;
                              c.residual = p.to_string();
                              c.detail = p.is_zero() ? "annihilated" : "not annihilated";
                            }));
  out.push_back(timed_check("heisenberg:p3.constant", Provenance::Trivial, "P3 annihilates constants",
                            [&](CheckResult& c) { expect_zero(c, p3_operator(st, LogExpr(1))); }));
  return out;
}

CheckList log_green_identity(int power) {
  CheckList out;
  auto residual = [](int p) {
    LogExpr lg = flat_log_green(p);
    LogExpr d = z1(lg);
    return z1(d) - LogExpr(2) * d * d;
  };
  out.push_back(timed_check("heisenberg:log_green.frame_identity", Provenance::Paper,
                            "Z1 Z1 log G - 2 (Z1 log G)^2 = 0 for the flat Green's function",
                            [&](CheckResult& c) {
                              expect_zero(c, residual(power));
                              if (power != 1) c.detail = "Green's function power " + std::to_string(power);
                            }));
  if (power == 1)
    out.push_back(timed_check("heisenberg:log_green.wrong_power_control", Provenance::Derived,
                              "1/(2 pi rho^4) must violate the same identity",
                              [&](CheckResult& c) { expect_nonzero(c, residual(2)); }));
  return out;
}

CheckList flat_torsion_of_hat() {
  const auto& m = FlatModel::get();
  CheckList out;
  LogExpr y = m.log_green * LogExpr(2);
  auto tt = torsion_transform(m.st, y);
  auto hat = conformal_change(m.st, y);
  out.push_back(timed_check("heisenberg:hat.torsion_transform", Provenance::Paper,
                            "transformation law of torsion gives A-hat = 0 for G^2 theta",
                            [&](CheckResult& c) { expect_zero(c, tt.a11_hat); }));
  out.push_back(timed_check("heisenberg:hat.torsion", Provenance::Paper, "re-solved G^2 theta has A-hat = 0",
                            [&](CheckResult& c) { expect_zero(c, hat.torsion); }));
  out.push_back(timed_check("heisenberg:hat.curvature", Provenance::Paper,
                            "G^2 theta has vanishing scalar curvature away from the pole",
                            [&](CheckResult& c) { expect_zero(c, hat.r); }));
  out.push_back(timed_check("heisenberg:hat.q_prime", Provenance::Paper, "Q-hat' = -4 |A-hat|^2 = 0 in the flat case",
                            [&](CheckResult& c) { expect_zero(c, q_prime(hat)); }));
  out.push_back(timed_check("heisenberg:hat.dual_path", Provenance::Derived,
                            "transformation law and re-solve give the same torsion tensor",
                            [&](CheckResult& c) { expect_zero(c, tt.tensor_zz - torsion_tensor_zz(hat)); }));
  out.push_back(timed_check("heisenberg:hat.residuals", Provenance::Derived, "structure equations of G^2 theta",
                            [&](CheckResult& c) {
                              bool ok = structure_residuals(hat).all_zero();
                              c.status = ok ? Status::Pass : Status::Fail;
                              c.residual = ok ? "0" : "nonzero";
                            }));
  return out;
}

CheckList szego_checks() {
  const auto& st = FlatModel::get().st;
  CheckList out;
  LogExpr k = szego_candidate();
  out.push_back(timed_check("heisenberg:szego.closed_form", Provenance::Derived,
                            "P'(log G) = 16 Re((|z|^2 - iu)^-2)", [&](CheckResult& c) {
                              expect_zero(c, k - szego_closed_form());
                              c.detail = k.to_string();
                            }));
  out.push_back(timed_check("heisenberg:szego.pluriharmonic", Provenance::Derived,
                            "P3 annihilates P'(log G) away from the pole",
                            [&](CheckResult& c) { expect_zero(c, p3_operator(st, k)); }));
  out.push_back(timed_check("heisenberg:szego.real", Provenance::Derived, "P'(log G) is real",
                            [&](CheckResult& c) { expect_zero(c, k - k.conj()); }));
  out.push_back(timed_check("heisenberg:szego.homogeneity", Provenance::Derived,
                            "P'(log G) has weighted degree -4 under (z, u) -> (tz, t^2 u)",
                            [&](CheckResult& c) { expect_zero(c, euler(k) + LogExpr(4) * k); }));
  out.push_back(timed_check("heisenberg:szego.kernel_candidate", Provenance::Derived,
                            "S_p candidate = P'(log G) / (8 pi^2)", [&](CheckResult& c) {
                              c.status = Status::Recorded;
                              c.residual = "(2/pi^2) Re((|z|^2 - iu)^-2)";
                              c.detail = "normalization against the projection kernel is not asserted";
                            }));
  return out;
}

CheckList flat_closure_identity() {
  const auto& m = FlatModel::get();
  CheckList out;
  const LogExpr& lg = m.log_green;
  LogExpr pp = p_prime(m.st, lg);
  LogExpr p_sq = paneitz(m.st, lg * lg, PaneitzConvention::Body);
  LogExpr p_lg = paneitz(m.st, lg, PaneitzConvention::Body);
  LogExpr p3 = p3_operator(m.st, lg);
  LogExpr qp = q_prime(m.st);
  out.push_back(timed_check("heisenberg:closure.p3_log_green", Provenance::Paper, "P3 log G = 0 on the flat model",
                            [&](CheckResult& c) { expect_zero(c, p3); }));
  out.push_back(timed_check("heisenberg:closure.q_prime", Provenance::Trivial, "Q' = 0 on the flat model",
                            [&](CheckResult& c) { expect_zero(c, qp); }));
  out.push_back(timed_check("heisenberg:closure.p_log_green", Provenance::Derived, "P log G on the flat model",
                            [&](CheckResult& c) {
                              c.status = Status::Recorded;
                              c.residual = p_lg.to_string();
                            }));
  out.push_back(timed_check("heisenberg:closure.p_log_green_squared", Provenance::Derived,
                            "P (log G)^2 cancels P'(log G)", [&](CheckResult& c) {
                              expect_zero(c, p_sq + szego_closed_form());
                              c.detail = p_sq.to_string();
                            }));
  out.push_back(timed_check("heisenberg:closure.closure", Provenance::Derived,
                            "P'(log G) + P((log G)^2) = 0 away from the pole",
                            [&](CheckResult& c) { expect_zero(c, pp + p_sq); }));
  out.push_back(timed_check("heisenberg:closure.recombination", Provenance::Paper,
                            "-4 G^4 |A-hat|^2 = Q' + 2P'(log G) + 2P((log G)^2) - 4 log G P(log G) - 64 Re(grad log G)(P3 log G)",
                            [&](CheckResult& c) {
                              LogExpr last = m.st.g_inv * m.st.z1bar().apply(lg) * p3;
                              LogExpr rhs = qp + LogExpr(2) * pp + LogExpr(2) * p_sq - LogExpr(4) * lg * p_lg -
                                            LogExpr(64) * re(last);
                              expect_zero(c, rhs);
                            }));
  return out;
}

CheckList paneitz_conventions(std::uint64_t seed) {
  const auto& st = FlatModel::get().st;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-5, 5);
  // Real polynomial of weight <= 6.
  Poly f;
  for (int a = 0; a <= 3; ++a)
    for (int b = a; b <= 3; ++b)
      for (int k = 0; a + b + 2 * k <= 6; ++k) {
        GaussRational c(coef(rng), 1, coef(rng), 1);
        Poly mono = pow(z(), a) * pow(zb(), b) * pow(u(), k);
        if (a == b)
          f += GaussRational(c.re()) * mono;
        else
          f += c * mono + c.conj() * mono.conj();
      }
  CheckList out;
  out.push_back(timed_check("heisenberg:paneitz.intro_vs_body", Provenance::Derived,
                            "Paneitz operator: intro and body normalizations on a random real polynomial",
                            [&](CheckResult& c) {
                              LogExpr intro = paneitz(st, LogExpr(f), PaneitzConvention::Intro);
                              LogExpr body = paneitz(st, LogExpr(f), PaneitzConvention::Body);
                              LogExpr d = body - intro;
                              c.status = Status::Recorded;
                              c.residual = d.to_string();
                              c.detail = "f = " + f.to_string() + "; body - intro" + (d.is_zero() ? " = 0" : "");
                            }));
  return out;
}

CheckList heisenberg_suite(std::uint64_t seed, int green_power) {
  CheckList out;
  for (auto&& part : {frame_identities(), green_harmonicity(), p3_log_rho(), log_green_identity(green_power),
                      flat_torsion_of_hat(), szego_checks(), flat_closure_identity(), paneitz_conventions(seed)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace crprime
