#include "crprime/symbolic/rational.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crprime {

namespace {

Poly s_squared() { return pow(vars::z() * vars::zb(), 2) + pow(vars::u(), 2); }

FactorList standard_factors() { return {{vars::zeta(), 1}, {vars::zeta_bar(), 1}}; }

void merge_sorted(FactorList& list) {
  std::sort(list.begin(), list.end(), [](const Factor& a, const Factor& b) { return a.base < b.base; });
  FactorList out;
  for (auto& f : list) {
    if (f.exponent == 0) continue;
    if (!out.empty() && out.back().base == f.base) {
      out.back().exponent += f.exponent;
    } else {
      out.push_back(std::move(f));
    }
  }
  list = std::move(out);
}

Poly expand(const FactorList& list) {
  Poly out(1);
  for (const auto& f : list) out *= pow(f.base, f.exponent);
  return out;
}

int exponent_of(const FactorList& list, const Poly& base) {
  for (const auto& f : list)
    if (f.base == base) return f.exponent;
  return 0;
}

// Quick necessary condition for f | g.
bool may_divide(const Poly& f, const Poly& g) {
  return f.leading().first.divides(g.leading().first);
}

}  // namespace

std::pair<GaussRational, FactorList> split_denominator(const Poly& p_in, const FactorList& hints) {
  if (p_in.is_zero()) throw std::domain_error("RatFunc: division by the zero polynomial");
  if (p_in.depends_on(Var::S)) throw std::logic_error("split_denominator: factor depends on s");
  Poly p = p_in;
  FactorList out;
  if (p.is_constant()) return {p.constant_term(), out};

  // Monomial content.
  Monomial content = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms()) {
    Monomial::Exps e = content.exps();
    for (int k = 0; k < kNumVars; ++k) e[k] = std::min(e[k], m.exps()[k]);
    content = Monomial(e);
  }
  if (!content.is_one()) {
    Poly reduced;
    for (const auto& [m, c] : p.terms()) reduced.add_term(content.quotient_of(m), c);
    p = reduced;
    for (int k = 0; k < kNumVars; ++k)
      if (content.exps()[k] > 0) out.push_back({Poly::var(static_cast<Var>(k)), content.exps()[k]});
  }

  FactorList candidates = hints;
  for (auto& f : standard_factors()) candidates.push_back(f);
  for (const auto& h : candidates) {
    if (h.base.is_constant() || p.is_constant()) continue;
    int count = 0;
    while (!p.is_constant() && may_divide(h.base, p)) {
      auto q = p.divide_exact(h.base);
      if (!q) break;
      p = std::move(*q);
      ++count;
    }
    if (count > 0) out.push_back({h.base, count});
  }
  GaussRational c(1);
  if (p.is_constant()) {
    c = p.constant_term();
  } else {
    c = p.make_monic();
    out.push_back({p, 1});
  }
  merge_sorted(out);
  return {c, out};
}

void refine_factor_bases(std::vector<FactorList*> lists) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Poly> bases;
    for (auto* l : lists)
      for (const auto& f : *l)
        if (std::find(bases.begin(), bases.end(), f.base) == bases.end()) bases.push_back(f.base);
    for (std::size_t i = 0; i < bases.size() && !changed; ++i) {
      for (std::size_t j = 0; j < bases.size() && !changed; ++j) {
        if (i == j || !may_divide(bases[i], bases[j])) continue;
        auto q = bases[j].divide_exact(bases[i]);
        if (!q) continue;
        for (auto* l : lists) {
          int e = exponent_of(*l, bases[j]);
          if (e == 0) continue;
          l->erase(std::remove_if(l->begin(), l->end(), [&](const Factor& f) { return f.base == bases[j]; }),
                   l->end());
          l->push_back({bases[i], e});
          l->push_back({*q, e});
          merge_sorted(*l);
        }
        changed = true;
      }
    }
  }
}

RatFunc::RatFunc(const Poly& numerator) : num_(numerator.reduce_s()) {}

RatFunc RatFunc::with_denominator(const Poly& numerator, const FactorList& factors) {
  RatFunc r;
  GaussRational c(1);
  FactorList den;
  for (const auto& f : factors) {
    auto [fc, fl] = split_denominator(f.base, {});
    c *= pow(fc, f.exponent);
    for (auto& g : fl) den.push_back({g.base, g.exponent * f.exponent});
  }
  std::vector<FactorList*> lists{&den};
  refine_factor_bases(lists);
  merge_sorted(den);
  r.num_ = (numerator * c.inverse()).reduce_s();
  r.den_ = std::move(den);
  r.cancel();
  return r;
}

RatFunc RatFunc::fraction(const Poly& numerator, const Poly& denominator) {
  return RatFunc(numerator) / RatFunc(denominator);
}

Poly RatFunc::denominator_poly() const { return expand(den_); }

bool RatFunc::depends_on(Var v) const {
  if (num_.depends_on(v)) return true;
  return std::any_of(den_.begin(), den_.end(), [v](const Factor& f) { return f.base.depends_on(v); });
}

void RatFunc::normalize() {
  merge_sorted(den_);
  cancel();
}

void RatFunc::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    while (f.exponent > 0 && may_divide(f.base, num_)) {
      auto q = num_.divide_exact(f.base);
      if (!q) break;
      num_ = std::move(*q);
      --f.exponent;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& f) { return f.exponent == 0; }),
             den_.end());
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    cancel();
    return *this;
  }
  FactorList a = den_;
  FactorList b = o.den_;
  refine_factor_bases({&a, &b});
  FactorList lcm = a;
  for (const auto& f : b) {
    int e = exponent_of(lcm, f.base);
    if (e == 0) {
      lcm.push_back(f);
    } else if (e < f.exponent) {
      for (auto& g : lcm)
        if (g.base == f.base) g.exponent = f.exponent;
    }
  }
  merge_sorted(lcm);
  Poly ma(1), mb(1);
  for (const auto& f : lcm) {
    ma *= pow(f.base, f.exponent - exponent_of(a, f.base));
    mb *= pow(f.base, f.exponent - exponent_of(b, f.base));
  }
  num_ = num_ * ma + o.num_ * mb;
  den_ = std::move(lcm);
  cancel();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc{};
  FactorList a = den_;
  FactorList b = o.den_;
  if (!b.empty()) {
    refine_factor_bases({&a, &b});
    for (auto& f : b) a.push_back(f);
  }
  merge_sorted(a);
  num_ = (num_ * o.num_).reduce_s();
  den_ = std::move(a);
  cancel();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  const Poly a = num_.coeff_in(Var::S, 0);
  const Poly b = num_.coeff_in(Var::S, 1);
  Poly new_num = expand(den_);
  Poly m;
  if (b.is_zero()) {
    m = a;
  } else {
    new_num = (new_num * (a - b * vars::s())).reduce_s();
    m = a * a - b * b * s_squared();
  }
  auto [c, factors] = split_denominator(m, den_);
  RatFunc r;
  r.num_ = new_num * c.inverse();
  r.den_ = std::move(factors);
  r.normalize();
  return r;
}

RatFunc RatFunc::conj() const {
  FactorList f;
  f.reserve(den_.size());
  for (const auto& x : den_) f.push_back({x.base.conj(), x.exponent});
  return with_denominator(num_.conj(), f);
}

RatFunc RatFunc::diff(Var v) const {
  if (v != Var::Z && v != Var::ZB && v != Var::U && v != Var::V)
    throw std::invalid_argument("RatFunc::diff: unsupported variable");
  const Poly a = num_.coeff_in(Var::S, 0);
  const Poly b = num_.coeff_in(Var::S, 1);
  const Poly sv = vars::s();
  // Numerator derivative with s held fixed.
  RatFunc out = with_denominator(a.diff(v) + b.diff(v) * sv, den_);
  // d s = d(s^2) / (2 s) = d(s^2) s / (2 s^2).
  if (!b.is_zero() && v != Var::V) {
    FactorList d = den_;
    d.push_back({vars::zeta(), 1});
    d.push_back({vars::zeta_bar(), 1});
    out += with_denominator(b * s_squared().diff(v) * sv * GaussRational(1, 2, 0, 1), d);
  }
  // Quotient rule over the factored denominator.
  if (!den_.empty()) {
    Poly acc;
    for (std::size_t i = 0; i < den_.size(); ++i) {
      Poly df = den_[i].base.diff(v);
      if (df.is_zero()) continue;
      Poly term = df * GaussRational(den_[i].exponent);
      for (std::size_t j = 0; j < den_.size(); ++j)
        if (j != i) term *= den_[j].base;
      acc += term;
    }
    if (!acc.is_zero()) {
      FactorList d = den_;
      for (auto& f : d) f.exponent += 1;
      out -= with_denominator(num_ * acc, d);
    }
  }
  return out;
}

std::complex<double> RatFunc::eval(const PointValue& p) const {
  std::complex<double> value = num_.eval(p);
  for (const auto& f : den_) value /= std::pow(f.base.eval(p), f.exponent);
  return value;
}

RatFunc pow(const RatFunc& r, int exponent) {
  if (exponent < 0) return pow(r.inverse(), -exponent);
  RatFunc result(1);
  RatFunc b = r;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

RatFunc rho_squared() { return RatFunc(vars::s()); }

std::string RatFunc::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ")/(";
  bool first = true;
  for (const auto& f : den_) {
    if (!first) os << "*";
    first = false;
    os << "(" << f.base.to_string() << ")";
    if (f.exponent > 1) os << "^" << f.exponent;
  }
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

}  // namespace crprime
