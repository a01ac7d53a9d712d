#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "crprime/symbolic/poly.hpp"

namespace crprime {

/// Denominator factor: a monic, s-free polynomial raised to a positive power.
struct Factor {
  Poly base;
  int exponent = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

using FactorList = std::vector<Factor>;

/// Element of the field Q(i)(z, zb, u, v, pi)[s] / (s^2 - (z zb)^2 - u^2).
///
/// The numerator has s-degree at most 1. The denominator is kept factored into
/// monic s-free polynomials; every inversion rationalises s away by
/// multiplying with the s-conjugate. No multivariate gcd is computed. Factor
/// lists are refined by trial division and common factors with the numerator
/// are cancelled the same way, so the representation is not canonical but the
/// zero test (numerator == 0) is exact.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const Poly& numerator);          // NOLINT(google-explicit-constructor)
  RatFunc(const GaussRational& c) : RatFunc(Poly(c)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Poly(c)) {}    // NOLINT
  /// numerator / prod(factors); factors need not be monic or coprime.
  static RatFunc with_denominator(const Poly& numerator, const FactorList& factors);
  static RatFunc fraction(const Poly& numerator, const Poly& denominator);

  const Poly& numerator() const { return num_; }
  const FactorList& denominator() const { return den_; }
  Poly denominator_poly() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  bool depends_on(Var v) const;

  RatFunc inverse() const;
  RatFunc conj() const;
  /// Derivative in z, zb, u or v; s is differentiated through s^2 = (z zb)^2 + u^2.
  RatFunc diff(Var v) const;
  bool is_real() const { return (*this - conj()).is_zero(); }

  std::complex<double> eval(const PointValue& p) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  /// Exact equality (difference normalises to zero).
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return (a - b).is_zero(); }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();
  void cancel();

  Poly num_;
  FactorList den_;
};

RatFunc pow(const RatFunc& r, int exponent);

/// s = rho^2 as a rational-layer value.
RatFunc rho_squared();

/// Split an s-free polynomial into constant * prod(monic factors), using
/// monomial content, the standard factors zeta, zeta-bar and the supplied hints.
std::pair<GaussRational, FactorList> split_denominator(const Poly& p, const FactorList& hints);

/// Rewrite the given factor lists over a common refined base (in place).
void refine_factor_bases(std::vector<FactorList*> lists);

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

}  // namespace crprime
