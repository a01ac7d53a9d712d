#include "crprime/sphere/integrand.hpp"

#include <algorithm>
#include <stdexcept>

namespace crprime {

CompiledPoly::CompiledPoly(const Poly& p) {
  for (const auto& [m, c] : p.terms()) {
    Term t{c.to_complex(), {}};
    for (int k = 0; k < kNumVars; ++k) {
      t.exps[k] = static_cast<std::uint8_t>(m.exps()[k]);
      max_deg_[k] = std::max(max_deg_[k], int(m.exps()[k]));
    }
    terms_.push_back(t);
  }
}

std::complex<double> CompiledPoly::eval(const PointValue& p) const {
  const std::array<std::complex<double>, kNumVars> base{
      p.z, p.zb, {p.u, 0}, {p.v, 0}, p.s(), {p.tau, 0}, {std::numbers::pi, 0}};
  std::array<std::vector<std::complex<double>>, kNumVars> powers;
  for (int k = 0; k < kNumVars; ++k) {
    powers[k].resize(max_deg_[k] + 1);
    powers[k][0] = 1;
    for (int e = 1; e <= max_deg_[k]; ++e) powers[k][e] = powers[k][e - 1] * base[k];
  }
  std::complex<double> acc = 0;
  for (const auto& t : terms_) {
    std::complex<double> v = t.coef;
    for (int k = 0; k < kNumVars; ++k)
      if (t.exps[k]) v *= powers[k][t.exps[k]];
    acc += v;
  }
  return acc;
}

ChartIntegrand ChartIntegrand::compile(const LogExpr& e, int pole_order) {
  ChartIntegrand out;
  out.pole_order_ = pole_order;
  for (const auto& [mono, coef] : e.terms()) {
    Piece piece;
    piece.numerator = CompiledPoly(coef.numerator());
    for (const auto& f : coef.denominator()) {
      if (f.base.constant_term().is_zero() && pole_order < 0)
        throw std::invalid_argument("compile_integrand: denominator " + f.base.to_string() +
                                    " vanishes at the origin and no singularity was declared");
      piece.denominator.emplace_back(CompiledPoly(f.base), f.exponent);
    }
    for (const auto& [arg, power] : mono.powers()) {
      if (arg.constant_term().is_zero() && pole_order < 0)
        throw std::invalid_argument("compile_integrand: log(" + arg.to_string() +
                                    ") is singular at the origin and no singularity was declared");
      piece.logs.emplace_back(CompiledPoly(arg), power);
    }
    out.pieces_.push_back(std::move(piece));
  }
  return out;
}

std::complex<double> ChartIntegrand::eval(const PointValue& p) const {
  std::complex<double> acc = 0;
  for (const auto& piece : pieces_) {
    std::complex<double> v = piece.numerator.eval(p);
    for (const auto& [f, k] : piece.denominator) v /= std::pow(f.eval(p), k);
    for (const auto& [a, k] : piece.logs) v *= std::pow(std::log(a.eval(p)), k);
    acc += v;
  }
  return acc;
}

double ChartIntegrand::operator()(double x, double y, double u) const {
  return eval(PointValue::physical({x, y}, u)).real();
}

namespace {

Poly exact_subst(const Poly& p, const mpq_class& x, const mpq_class& y, const mpq_class& u, const mpq_class& s) {
  Poly out = p.substitute(Var::Z, Poly(GaussRational(x, y)));
  out = out.substitute(Var::ZB, Poly(GaussRational(x, -y)));
  out = out.substitute(Var::U, Poly(GaussRational(u)));
  out = out.substitute(Var::S, Poly(GaussRational(s)));
  return out;
}

}  // namespace

std::complex<double> exact_eval(const RatFunc& e, const mpq_class& x, const mpq_class& y, const mpq_class& u,
                                const mpq_class& s) {
  PointValue pi_only{};
  std::complex<double> v = exact_subst(e.numerator(), x, y, u, s).eval(pi_only);
  for (const auto& f : e.denominator()) v /= std::pow(exact_subst(f.base, x, y, u, s).eval(pi_only), f.exponent);
  return v;
}

RationalProbe rational_probe(const mpq_class& x, const mpq_class& y, const mpq_class& t) {
  mpq_class a = x * x + y * y;
  mpq_class u = (a * a - t * t) / (2 * t);
  mpq_class s = (a * a + t * t) / (2 * t);
  return {x, y, u, s};
}

}  // namespace crprime
