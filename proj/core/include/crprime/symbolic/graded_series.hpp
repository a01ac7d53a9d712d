#pragma once

#include <climits>
#include <iosfwd>
#include <string>

#include "crprime/symbolic/poly.hpp"

namespace crprime {

/// Truncated polynomial in the anisotropic weight: represents poly + O(rho^k)
/// with k = error_order(). Every stored monomial has weight < k.
///
/// precision() is the truncation cap used by operations that produce
/// infinite series (invert, exp, log1p, sqrt); it propagates as a minimum.
/// Exact values carry kExact for both.
class GradedSeries {
 public:
  static constexpr int kExact = INT_MAX / 4;

  GradedSeries() = default;
  GradedSeries(const Poly& p, int error_order = kExact, int precision = kExact);  // NOLINT
  GradedSeries(const GaussRational& c) : GradedSeries(Poly(c)) {}  // NOLINT
  GradedSeries(long c) : GradedSeries(Poly(c)) {}  // NOLINT

  /// Exact polynomial with a finite truncation cap.
  static GradedSeries with_precision(const Poly& p, int precision);

  const Poly& poly() const { return poly_; }
  int error_order() const { return error_; }
  int precision() const { return precision_; }
  bool is_exact() const { return error_ >= kExact; }

  /// True if the tracked part vanishes (the value is O(rho^k)).
  bool is_zero() const { return poly_.is_zero(); }
  /// Weighted vanishing order: lowest weight present, or error_order if none.
  int vanishing_order() const;
  bool is_real() const { return poly_ == poly_.conj(); }

  GradedSeries truncated(int order) const;
  GradedSeries conj() const;
  /// Derivative; the error order drops by the weight of v. Throws
  /// std::domain_error if the result would carry no information.
  GradedSeries diff(Var v) const;
  GradedSeries inverse() const;
  GradedSeries exp() const;
  GradedSeries log1p() const;
  GradedSeries sqrt() const;
  GradedSeries substitute(Var v, const Poly& value) const;

  GradedSeries& operator+=(const GradedSeries& o);
  GradedSeries& operator-=(const GradedSeries& o);
  GradedSeries& operator*=(const GradedSeries& o);
  GradedSeries& operator*=(const GaussRational& c);
  GradedSeries& operator/=(const GradedSeries& o) { return *this *= o.inverse(); }

  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator/(GradedSeries a, const GradedSeries& b) { return a /= b; }
  GradedSeries operator-() const;

  /// Equal as truncated series: the difference is zero up to its error order.
  friend bool operator==(const GradedSeries& a, const GradedSeries& b) { return (a - b).is_zero(); }

  std::string to_string() const;

 private:
  void clip();
  Poly poly_;
  int error_ = kExact;
  int precision_ = kExact;
};

/// Product of two polynomials keeping only monomials of weight < cap.
Poly truncated_product(const Poly& a, const Poly& b, int cap);

std::ostream& operator<<(std::ostream& os, const GradedSeries& s);

}  // namespace crprime
