#include "crprime/symbolic/gauss_rational.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crprime {

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational::GaussRational(long re_num, long re_den, long im_num, long im_den)
    : GaussRational(mpq_class(re_num, re_den), mpq_class(im_num, im_den)) {}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussRational: division by zero");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("GaussRational: division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussRational pow(const GaussRational& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  GaussRational result{1};
  GaussRational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string GaussRational::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussRational& c) {
  if (c.is_real()) return os << c.re();
  if (sgn(c.re()) == 0) {
    if (c.im() == 1) return os << "i";
    if (c.im() == -1) return os << "-i";
    return os << c.im() << "*i";
  }
  os << "(" << c.re() << (sgn(c.im()) > 0 ? "+" : "-");
  mpq_class a = abs(c.im());
  if (a != 1) os << a << "*";
  return os << "i)";
}

}  // namespace crprime
