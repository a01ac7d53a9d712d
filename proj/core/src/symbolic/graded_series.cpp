#include "crprime/symbolic/graded_series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crprime {

namespace {

int sat_add(int a, int b) {
  if (a >= GradedSeries::kExact || b >= GradedSeries::kExact) return GradedSeries::kExact;
  return std::min(a + b, GradedSeries::kExact);
}

int min_weight_or_inf(const Poly& p) { return p.is_zero() ? GradedSeries::kExact : p.min_weight(); }

// Sum of coeffs[n] * h^n truncated at cap, for h with positive minimal weight.
Poly power_series(const Poly& h, const std::vector<GaussRational>& coeffs, int cap) {
  Poly out;
  Poly hp(1);
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (hp.is_zero()) break;
    if (!coeffs[n].is_zero()) out += hp * coeffs[n];
    hp = truncated_product(hp, h, cap);
  }
  return out;
}

int series_length(const Poly& h, int cap) {
  if (h.is_zero()) return 1;
  int w = h.min_weight();
  if (w <= 0) throw std::domain_error("GradedSeries: argument has non-positive weight part");
  return cap / w + 2;
}

int finite_cap(const GradedSeries& s, const char* what) {
  int cap = std::min(s.error_order(), s.precision());
  if (cap >= GradedSeries::kExact)
    throw std::domain_error(std::string("GradedSeries::") + what + ": no finite precision");
  return cap;
}

}  // namespace

Poly truncated_product(const Poly& a, const Poly& b, int cap) {
  Poly out;
  for (const auto& [ma, ca] : a.terms()) {
    int wa = ma.weight();
    for (const auto& [mb, cb] : b.terms())
      if (cap >= GradedSeries::kExact || wa + mb.weight() < cap) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

GradedSeries::GradedSeries(const Poly& p, int error_order, int precision)
    : poly_(p), error_(error_order), precision_(precision) {
  clip();
}

GradedSeries GradedSeries::with_precision(const Poly& p, int precision) {
  return GradedSeries(p, kExact, precision);
}

void GradedSeries::clip() {
  error_ = std::min({error_, precision_, kExact});
  if (error_ < kExact) poly_ = poly_.truncated(error_);
}

int GradedSeries::vanishing_order() const { return poly_.is_zero() ? error_ : poly_.min_weight(); }

GradedSeries GradedSeries::truncated(int order) const {
  return GradedSeries(poly_, std::min(order, error_), precision_);
}

GradedSeries GradedSeries::conj() const { return GradedSeries(poly_.conj(), error_, precision_); }

GradedSeries GradedSeries::diff(Var v) const {
  const int w = kVarWeight[static_cast<int>(v)];
  int e = error_;
  if (e < kExact) {
    e -= w;
    if (e <= 0) throw std::domain_error("GradedSeries::diff: error order exhausted");
  }
  return GradedSeries(poly_.diff(v), e, precision_);
}

GradedSeries GradedSeries::inverse() const {
  GaussRational c = poly_.constant_term();
  if (c.is_zero()) throw std::domain_error("GradedSeries::inverse: zero constant term");
  Poly h = poly_ - Poly(c);
  if (h.is_zero()) return GradedSeries(Poly(c.inverse()), error_, precision_);
  int cap = finite_cap(*this, "inverse");
  GaussRational ci = c.inverse();
  Poly x = h * (-ci);
  std::vector<GaussRational> coeffs(series_length(h, cap), GaussRational(1));
  return GradedSeries(power_series(x, coeffs, cap) * ci, error_, precision_);
}

GradedSeries GradedSeries::exp() const {
  if (!poly_.constant_term().is_zero()) throw std::domain_error("GradedSeries::exp: nonzero constant term");
  if (poly_.is_zero()) return GradedSeries(Poly(1), error_, precision_);
  int cap = finite_cap(*this, "exp");
  int n = series_length(poly_, cap);
  std::vector<GaussRational> coeffs;
  mpq_class f = 1;
  for (int k = 0; k < n; ++k) {
    coeffs.emplace_back(f);
    f /= (k + 1);
  }
  return GradedSeries(power_series(poly_, coeffs, cap), error_, precision_);
}

GradedSeries GradedSeries::log1p() const {
  if (!poly_.constant_term().is_zero()) throw std::domain_error("GradedSeries::log1p: nonzero constant term");
  if (poly_.is_zero()) return *this;
  int cap = finite_cap(*this, "log1p");
  int n = series_length(poly_, cap);
  std::vector<GaussRational> coeffs{GaussRational(0)};
  for (int k = 1; k < n; ++k) coeffs.emplace_back(mpq_class((k % 2 == 1) ? 1 : -1, k));
  return GradedSeries(power_series(poly_, coeffs, cap), error_, precision_);
}

GradedSeries GradedSeries::sqrt() const {
  if (poly_.constant_term() != GaussRational(1))
    throw std::domain_error("GradedSeries::sqrt: constant term must be 1");
  Poly h = poly_ - Poly(1);
  if (h.is_zero()) return *this;
  int cap = finite_cap(*this, "sqrt");
  int n = series_length(h, cap);
  std::vector<GaussRational> coeffs;
  mpq_class binom = 1;  // binomial(1/2, k)
  for (int k = 0; k < n; ++k) {
    coeffs.emplace_back(binom);
    binom *= mpq_class(1, 2) - k;
    binom /= (k + 1);
  }
  return GradedSeries(power_series(h, coeffs, cap), error_, precision_);
}

GradedSeries GradedSeries::substitute(Var v, const Poly& value) const {
  // Substituting a value of weight >= weight(v) cannot lower the error order.
  if (error_ < kExact && !value.is_zero() && value.min_weight() < kVarWeight[static_cast<int>(v)])
    throw std::domain_error("GradedSeries::substitute: substitution lowers the weight");
  return GradedSeries(poly_.substitute(v, value), error_, precision_);
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  poly_ += o.poly_;
  error_ = std::min(error_, o.error_);
  precision_ = std::min(precision_, o.precision_);
  clip();
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
  poly_ -= o.poly_;
  error_ = std::min(error_, o.error_);
  precision_ = std::min(precision_, o.precision_);
  clip();
  return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  int e = std::min({sat_add(a.error_, min_weight_or_inf(b.poly_)), sat_add(b.error_, min_weight_or_inf(a.poly_)),
                    sat_add(a.error_, b.error_)});
  int prec = std::min(a.precision_, b.precision_);
  int cap = std::min(e, prec);
  GradedSeries out;
  out.poly_ = truncated_product(a.poly_, b.poly_, cap);
  out.error_ = e;
  out.precision_ = prec;
  out.clip();
  return out;
}

GradedSeries& GradedSeries::operator*=(const GradedSeries& o) { return *this = *this * o; }

GradedSeries& GradedSeries::operator*=(const GaussRational& c) {
  poly_ *= c;
  return *this;
}

GradedSeries GradedSeries::operator-() const { return GradedSeries(-poly_, error_, precision_); }

std::string GradedSeries::to_string() const {
  std::ostringstream os;
  os << poly_.to_string();
  if (error_ < kExact) os << " + O(" << error_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedSeries& s) { return os << s.to_string(); }

}  // namespace crprime
