#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "crprime/symbolic/log_expr.hpp"

namespace crprime {

/// Double-precision copy of a polynomial for fast repeated evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const Poly& p);
  std::complex<double> eval(const PointValue& p) const;

 private:
  struct Term {
    std::complex<double> coef;
    std::array<std::uint8_t, kNumVars> exps;
  };
  std::vector<Term> terms_;
  std::array<int, kNumVars> max_deg_{};
};

/// An exact scalar compiled to a numerical function of (x, y, u), z = x + iy.
class ChartIntegrand {
 public:
  /// Throws std::invalid_argument if a denominator factor vanishes at the
  /// origin and `pole_order` (the declared blow-up rate in rho) is negative,
  /// i.e. no singularity was declared.
  static ChartIntegrand compile(const LogExpr& e, int pole_order = -1);

  double operator()(double x, double y, double u) const;
  std::complex<double> eval(const PointValue& p) const;
  int pole_order() const { return pole_order_; }

 private:
  struct Piece {
    CompiledPoly numerator;
    std::vector<std::pair<CompiledPoly, int>> denominator;
    std::vector<std::pair<CompiledPoly, int>> logs;
  };
  std::vector<Piece> pieces_;
  int pole_order_ = -1;
};

/// Exact value of a log-free expression at z = x + iy, u with rational x, y, u
/// chosen so that s is rational; pi is the only symbol left before the
/// final conversion to double.
std::complex<double> exact_eval(const RatFunc& e, const mpq_class& x, const mpq_class& y, const mpq_class& u,
                                const mpq_class& s);

/// Rational point with rational s: z = x + iy and u = (a^2 - t^2) / (2t), a = x^2 + y^2.
struct RationalProbe {
  mpq_class x, y, u, s;
};
RationalProbe rational_probe(const mpq_class& x, const mpq_class& y, const mpq_class& t);

}  // namespace crprime
