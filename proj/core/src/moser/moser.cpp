#include "crprime/moser/moser.hpp"

#include <random>
#include <stdexcept>

namespace crprime {

using namespace vars;

namespace {

GaussRational half() { return GaussRational(1, 2, 0, 1); }

GaussRational random_rational(std::mt19937_64& rng, bool real) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  long a = num(rng), b = den(rng);
  if (real) return GaussRational(a, b, 0, 1);
  long c = num(rng), d = den(rng);
  return GaussRational(a, b, c, d);
}

Poly random_u_poly(std::mt19937_64& rng, int degree, bool real) {
  Poly p;
  for (int k = 0; k <= degree; ++k) p += random_rational(rng, real) * pow(u(), k);
  return p;
}

bool only_u(const Poly& p) {
  for (Var v : {Var::Z, Var::ZB, Var::V, Var::S, Var::Tau, Var::Pi})
    if (p.depends_on(v)) return false;
  return true;
}

GradedSeries gs(const Poly& p, int precision) { return GradedSeries::with_precision(p, precision); }

}  // namespace

MoserData MoserData::random(std::uint64_t seed, int u_degree) {
  std::mt19937_64 rng(seed);
  MoserData md;
  md.c42 = random_u_poly(rng, u_degree, false);
  md.c33 = random_u_poly(rng, u_degree, true);
  return md;
}

MoserData MoserData::generic() {
  MoserData md;
  md.c42 = GaussRational(3, 2, 2, 3) + GaussRational(-1, 1, 1, 5) * u() + GaussRational(2, 7, -3, 4) * pow(u(), 2) +
           GaussRational(5, 3, 1, 1) * pow(u(), 3) + GaussRational(-4, 5, -2, 9) * pow(u(), 4) +
           GaussRational(1, 6, 7, 2) * pow(u(), 5);
  md.c33 = Poly(GaussRational(5, 4, 0, 1)) + GaussRational(-2, 3, 0, 1) * u() + GaussRational(7, 5, 0, 1) * pow(u(), 2) +
           GaussRational(1, 9, 0, 1) * pow(u(), 3) + GaussRational(-3, 2, 0, 1) * pow(u(), 4) +
           GaussRational(2, 1, 0, 1) * pow(u(), 5);
  // Weight 7 and 8 terms of normal-form shape, made real by pairing.
  Poly t7 = (GaussRational(2, 3, -1, 2) + GaussRational(1, 4, 3, 1) * u()) * pow(z(), 5) * pow(zb(), 2);
  Poly t7b = (GaussRational(-1, 5, 2, 7) + GaussRational(3, 1, -1, 3) * pow(u(), 2)) * pow(z(), 4) * pow(zb(), 3);
  Poly t8 = (GaussRational(1, 1, 1, 1) + GaussRational(-2, 9, 0, 1) * u()) * pow(z(), 6) * pow(zb(), 2);
  Poly t8r = GaussRational(3, 7, 0, 1) * u() * pow(z(), 4) * pow(zb(), 4);
  md.extra = t7 + t7.conj() + t7b + t7b.conj() + t8 + t8.conj() + t8r;
  return md;
}

Poly MoserData::e() const {
  return -(c42 * pow(z(), 4) * pow(zb(), 2)) - c42.conj() * pow(z(), 2) * pow(zb(), 4) -
         c33 * pow(z(), 3) * pow(zb(), 3) + extra;
}

Poly MoserData::marked_e() const {
  Poly out;
  const Poly ee = e();
  for (const auto& [m, c] : ee.terms()) {
    Monomial mm = m;
    int w = m.weight();
    if (w > 6) mm.set(Var::Tau, m[Var::Tau] + (w - 6));
    out.add_term(mm, c);
  }
  return out;
}

void MoserData::validate() const {
  if (!only_u(c42) || !only_u(c33)) throw std::invalid_argument("MoserData: c42 and c33 must be polynomials in u");
  if (!c33.is_real()) throw std::invalid_argument("MoserData: c33 must be real");
  Poly ee = e();
  if (!ee.is_real()) throw std::invalid_argument("MoserData: E must be real");
  for (Var v : {Var::V, Var::S, Var::Tau, Var::Pi})
    if (ee.depends_on(v)) throw std::invalid_argument("MoserData: E must be a polynomial in z, zb, u");
}

Poly defining_function(const MoserData& md) { return v() - z() * zb() + md.e(); }

DifferentialForm<GradedSeries> moser_contact_form(const MoserData& md, int precision) {
  md.validate();
  const Poly e = md.marked_e();
  const Poly ez = e.diff(Var::Z), ezb = e.diff(Var::ZB), eu = e.diff(Var::U);
  const Poly one_i_eu = Poly(1) + i() * eu;
  Poly th_z = one_i_eu * i() * (zb() - ez) * half() - i() * zb() + i() * ez;
  Poly th_zb = one_i_eu * i() * (z() - ezb) * half();
  Poly th_u = (Poly(1) + eu * eu) * half();
  return DifferentialForm<GradedSeries>::one_form(gs(th_z, precision), gs(th_zb, precision), gs(th_u, precision));
}

int moser_precision(int order) { return order + 4; }

MoserStructure moser_structure(const MoserData& md, int order) {
  if (order < 6) throw std::invalid_argument("moser_structure: order must be at least 6 to see E");
  MoserStructure ms;
  ms.order = order;
  ms.precision = moser_precision(order);
  ms.st = solve_structure(moser_contact_form(md, ms.precision));
  ms.e = gs(md.marked_e(), ms.precision);
  ms.lambda = ms.st.z1[2];
  GradedSeries eu = ms.e.diff(Var::U);
  GradedSeries num = -(ms.e.diff(Var::U).diff(Var::Z)) - ms.lambda * eu.diff(Var::U);
  ms.a1 = num * (GradedSeries(GaussRational::i()) + eu).inverse();
  return ms;
}

GradedSeries moser_quantity(const MoserStructure& ms, const std::string& name) {
  const auto& st = ms.st;
  if (name == "lambda") return ms.lambda;
  if (name == "a1") return ms.a1;
  if (name == "g") return st.g;
  if (name == "g_inv") return st.g_inv;
  if (name == "A") return st.torsion;
  if (name == "R") return st.r;
  if (name == "pe_tensor") return pseudo_einstein_tensor(st);
  if (name == "Z1bar_a1bar") return st.g_inv * st.z1.apply(st.gamma1bar);
  if (name == "Z1bar_g") return st.g_inv * st.z1.apply(st.g);
  if (name == "q_prime") return q_prime(st);
  throw std::invalid_argument("moser_quantity: unknown quantity '" + name + "'");
}

GradedSeries evaluate_golden(const GoldenExpansion& g, const Poly& marked_e) {
  Poly total;
  for (const auto& t : g.terms) {
    Poly term = t.coef * pow(z(), t.monomial[0]) * pow(zb(), t.monomial[1]) * pow(u(), t.monomial[2]);
    if (t.e_derivative) {
      Poly d = marked_e;
      const std::array<Var, 3> dv{Var::Z, Var::ZB, Var::U};
      for (int k = 0; k < 3; ++k)
        for (int n = 0; n < (*t.e_derivative)[k]; ++n) d = d.diff(dv[k]);
      term *= d;
    }
    total += term;
  }
  return GradedSeries(total, g.remainder_order);
}

ExpansionCheck verify_expansion(const MoserStructure& ms, const GoldenExpansion& g) {
  ExpansionCheck out;
  out.id = g.id;
  out.remainder_order = g.remainder_order;
  GradedSeries engine = moser_quantity(ms, g.quantity);
  out.engine_error_order = engine.error_order();
  GradedSeries expected = evaluate_golden(g, ms.e.poly());
  out.difference = (engine - expected).truncated(g.remainder_order);
  if (engine.error_order() < g.remainder_order) {
    out.pass = false;
    out.detail = "engine series is only known to O(" + std::to_string(engine.error_order()) + ")";
    return out;
  }
  out.pass = out.difference.is_zero();
  out.detail = out.pass ? "exact agreement" : "difference " + out.difference.to_string();
  return out;
}

namespace {

OrderClaim claim(const std::string& id, int printed, const GradedSeries& s) {
  return {id, printed, s.vanishing_order(), s.error_order()};
}

}  // namespace

std::vector<OrderClaim> order_pattern_structure(const MoserStructure& ms) {
  const auto& st = ms.st;
  const GradedSeries one(1);
  const GradedSeries i_half(GaussRational(0, 1, 1, 2));
  // theta-circle components: dz -> -(i/2) zb, dzb -> (i/2) z, du -> 1/2.
  const GradedSeries fz = -i_half * GradedSeries(zb());
  const GradedSeries fzb = i_half * GradedSeries(z());
  auto split = [&](const DifferentialForm<GradedSeries>& f) {
    GradedSeries c0 = GradedSeries(2) * f[mask::du];
    return std::array<GradedSeries, 3>{c0, f[mask::dz] - c0 * fz, f[mask::dzb] - c0 * fzb};
  };
  std::vector<OrderClaim> out;
  auto th = split(st.theta);
  out.push_back(claim("coframe:theta.theta0-1", 4, th[0] - one));
  out.push_back(claim("coframe:theta.dz", 5, th[1]));
  out.push_back(claim("coframe:theta.dzb", 5, th[2]));
  auto th1 = split(st.theta1);
  out.push_back(claim("coframe:theta1.theta0", 3, th1[0]));
  out.push_back(claim("coframe:theta1.dz-1", 8, th1[1] - one));
  out.push_back(claim("coframe:theta1.dzb", 8, th1[2]));
  out.push_back(claim("coframe:Z1.du-izb", 5, ms.lambda - GradedSeries(i() * zb())));
  auto om = split(st.omega());
  out.push_back(claim("coframe:omega.theta0", 2, om[0]));
  out.push_back(claim("coframe:omega.dz", 3, om[1]));
  out.push_back(claim("coframe:omega.dzb", 7, om[2]));
  out.push_back(claim("coframe:A", 2, st.torsion));
  out.push_back(claim("coframe:R", 2, st.r));
  out.push_back(claim("coframe:g-1", 4, st.g - one));
  out.push_back(claim("coframe:g_inv-1", 4, st.g_inv - one));
  return out;
}

std::vector<OrderClaim> order_pattern_sublaplacian(const MoserStructure& ms) {
  const auto& st = ms.st;
  // Z_1 = Z1-circle + mu d_u.
  GradedSeries mu = ms.lambda - GradedSeries(i() * zb());
  GradedSeries mub = mu.conj();
  VectorField<GradedSeries> z1c(GradedSeries(1), GradedSeries{}, GradedSeries(i() * zb()));
  VectorField<GradedSeries> z1bc = z1c.conj();
  const GradedSeries& gi = st.g_inv;
  const GradedSeries& gb = st.gamma1bar;
  GradedSeries gbc = gb.conj();
  GradedSeries two(2);
  std::vector<OrderClaim> out;
  out.push_back(claim("sublaplacian:flat-1", 4, gi - GradedSeries(1)));
  out.push_back(claim("sublaplacian:d_uu", 10, two * gi * mu * mub));
  GradedSeries du_coef = z1bc.apply(mu) + z1c.apply(mub) + mub * mu.diff(Var::U) + mu * mub.diff(Var::U) - gb * mu -
                         gbc * mub;
  out.push_back(claim("sublaplacian:d_u", 4, gi * du_coef));
  out.push_back(claim("sublaplacian:d_u.Z1", 5, two * gi * mub));
  out.push_back(claim("sublaplacian:d_u.Z1bar", 5, two * gi * mu));
  out.push_back(claim("sublaplacian:Z1", 7, gi * gb));
  out.push_back(claim("sublaplacian:Z1bar", 7, gi * gbc));
  return out;
}

GradedSeries chain_restriction(const MoserStructure& ms) {
  GradedSeries pe = pseudo_einstein_tensor(ms.st);
  return pe.substitute(Var::Z, Poly()).substitute(Var::ZB, Poly());
}

Poly cartan_coefficient(const MoserData& md) {
  Poly d = md.e();
  for (int k = 0; k < 3; ++k) d = d.diff(Var::Z);
  for (int k = 0; k < 2; ++k) d = d.diff(Var::ZB);
  Poly out;
  for (const auto& [m, c] : d.terms())
    if (m[Var::Z] == 1 && m[Var::ZB] == 0) out.add_term(Monomial::of(Var::U, m[Var::U]), c);
  return out;
}

Poly fefferman_j(const Poly& psi) {
  auto dw = [](const Poly& f) { return (f.diff(Var::U) - i() * f.diff(Var::V)) * half(); };
  auto dwb = [](const Poly& f) { return (f.diff(Var::U) + i() * f.diff(Var::V)) * half(); };
  const Poly pz = psi.diff(Var::Z), pzb = psi.diff(Var::ZB), pw = dw(psi), pwb = dwb(psi);
  const Poly m[3][3] = {{psi, pzb, pwb}, {pz, pz.diff(Var::ZB), dwb(pz)}, {pw, dw(pzb), dwb(pw)}};
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

GradedSeries fefferman_on_surface(const MoserData& md) {
  md.validate();
  const Poly e = md.marked_e();
  Poly r = v() - z() * zb() + e;
  Poly j = fefferman_j(r) * GaussRational(4);
  return GradedSeries(j.substitute(Var::V, z() * zb() - e));
}

}  // namespace crprime
