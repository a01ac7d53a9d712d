#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <string>

#include "crprime/symbolic/rational.hpp"

namespace crprime {

/// Product of powers of log atoms. An atom is log(arg) for a polynomial arg
/// that is positive (or, for zeta and zeta-bar, nonvanishing) on the domain.
class LogMonomial {
 public:
  LogMonomial() = default;
  static LogMonomial atom(const Poly& arg);

  const std::map<Poly, int>& powers() const { return powers_; }
  bool is_one() const { return powers_.empty(); }
  int degree() const;
  LogMonomial conj() const;

  friend LogMonomial operator*(const LogMonomial& a, const LogMonomial& b);
  friend bool operator==(const LogMonomial&, const LogMonomial&) = default;
  friend bool operator<(const LogMonomial& a, const LogMonomial& b) { return a.powers_ < b.powers_; }

  std::string to_string() const;

 private:
  friend class LogExpr;
  std::map<Poly, int> powers_;
};

/// Polynomial in log atoms with RatFunc coefficients.
///
/// Atoms are assumed algebraically independent. log s is not an atom: it is
/// expanded as (log zeta + log zeta-bar) / 2, so the canonical atoms are
/// log zeta, log zeta-bar and user-declared log(p).
class LogExpr {
 public:
  LogExpr() = default;
  LogExpr(const RatFunc& r);  // NOLINT(google-explicit-constructor)
  LogExpr(const Poly& p) : LogExpr(RatFunc(p)) {}  // NOLINT(google-explicit-constructor)
  LogExpr(const GaussRational& c) : LogExpr(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  LogExpr(long c) : LogExpr(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)

  /// log(arg). Constant and nonconstant arguments are both allowed.
  static LogExpr log(const Poly& arg);
  static LogExpr log_zeta();
  static LogExpr log_zeta_bar();
  /// log s = log rho^2.
  static LogExpr log_s();

  const std::map<LogMonomial, RatFunc>& terms() const { return terms_; }
  /// Coefficient of the log-free part.
  RatFunc rational_part() const;
  bool has_logs() const;

  /// Exact zero test. Throws std::invalid_argument if two atoms are visibly
  /// dependent (one argument divides another).
  bool is_zero() const;
  bool is_real() const { return (*this - conj()).is_zero(); }

  LogExpr conj() const;
  LogExpr diff(Var v) const;
  /// Only for log-free expressions.
  LogExpr inverse() const;

  std::complex<double> eval(const PointValue& p) const;

  LogExpr& operator+=(const LogExpr& o);
  LogExpr& operator-=(const LogExpr& o);
  LogExpr& operator*=(const LogExpr& o);
  LogExpr& operator*=(const GaussRational& c);
  LogExpr& operator/=(const LogExpr& o) { return *this *= o.inverse(); }

  friend LogExpr operator+(LogExpr a, const LogExpr& b) { return a += b; }
  friend LogExpr operator-(LogExpr a, const LogExpr& b) { return a -= b; }
  friend LogExpr operator*(LogExpr a, const LogExpr& b) { return a *= b; }
  friend LogExpr operator/(LogExpr a, const LogExpr& b) { return a /= b; }
  LogExpr operator-() const;

  std::string to_string() const;

 private:
  void add_term(const LogMonomial& m, const RatFunc& c);
  std::map<LogMonomial, RatFunc> terms_;
};

/// exp(Y) for Y = sum of rational multiples of log atoms with no log-free
/// part. Integer exponents are required except for the zeta / zeta-bar pair,
/// which may carry equal half-integers (giving powers of s). Throws
/// std::domain_error otherwise.
RatFunc exp_of_logs(const LogExpr& y);

std::ostream& operator<<(std::ostream& os, const LogExpr& e);

}  // namespace crprime
