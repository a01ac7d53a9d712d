#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>

namespace crprime {

/// Exact element of Q(i): re + i*im with arbitrary-precision rational parts.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re, mpq_class im = 0);
  GaussRational(long re_num, long re_den, long im_num, long im_den);

  static GaussRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  /// Multiplicative inverse; throws std::domain_error on zero.
  GaussRational inverse() const;
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
  /// Total order (re first, then im); only meaningful for canonical sorting.
  friend bool operator<(const GaussRational& a, const GaussRational& b) {
    int c = cmp(a.re_, b.re_);
    return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

GaussRational pow(const GaussRational& base, int exponent);

std::ostream& operator<<(std::ostream& os, const GaussRational& c);

}  // namespace crprime
