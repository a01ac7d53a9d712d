#include "crprime/symbolic/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crprime {

namespace {
constexpr std::array<const char*, kNumVars> kVarNames{"z", "zb", "u", "v", "s", "tau", "pi"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

Monomial Monomial::of(Var v, int power) {
  Monomial m;
  m.set(v, power);
  return m;
}

Monomial Monomial::zzu(int a, int b, int c) {
  Monomial m;
  m.set(Var::Z, a);
  m.set(Var::ZB, b);
  m.set(Var::U, c);
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

int Monomial::weight() const {
  int w = 0;
  for (int k = 0; k < kNumVars; ++k) w += kVarWeight[k] * exps_[k];
  return w;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial Monomial::conj() const {
  Monomial m = *this;
  std::swap(m.exps_[0], m.exps_[1]);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (int k = 0; k < kNumVars; ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial m;
  for (int k = 0; k < kNumVars; ++k) m.exps_[k] = static_cast<std::uint16_t>(other.exps_[k] - exps_[k]);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int k = 0; k < kNumVars; ++k) m.exps_[k] = static_cast<std::uint16_t>(a.exps_[k] + b.exps_[k]);
  return m;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int k = 0; k < kNumVars; ++k) {
    if (exps_[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += kVarNames[k];
    if (exps_[k] > 1) out += "^" + std::to_string(exps_[k]);
  }
  return out.empty() ? "1" : out;
}

std::complex<double> PointValue::s() const {
  auto q = z * zb;
  return std::sqrt(q * q + std::complex<double>(u * u, 0));
}

Poly::Poly(const GaussRational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(Var v) { return term(Monomial::of(v), GaussRational(1)); }

Poly Poly::term(const Monomial& m, const GaussRational& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

GaussRational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussRational{} : it->second;
}

const std::pair<const Monomial, GaussRational>& Poly::leading() const {
  if (terms_.empty()) throw std::logic_error("Poly::leading on zero polynomial");
  return *terms_.rbegin();
}

bool Poly::depends_on(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] > 0; });
}

int Poly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

Poly Poly::coeff_in(Var v, int k) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (m[v] != k) continue;
    Monomial r = m;
    r.set(v, 0);
    out.terms_.emplace(r, c);
  }
  return out;
}

int Poly::min_weight() const {
  if (terms_.empty()) throw std::logic_error("Poly::min_weight on zero polynomial");
  int w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_) w = std::min(w, m.weight());
  return w;
}

int Poly::max_weight() const {
  if (terms_.empty()) throw std::logic_error("Poly::max_weight on zero polynomial");
  int w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
  return w;
}

Poly Poly::truncated(int order) const {
  Poly out;
  for (const auto& t : terms_)
    if (t.first.weight() < order) out.terms_.insert(out.terms_.end(), t);
  return out;
}

Poly Poly::homogeneous_part(int weight) const {
  Poly out;
  for (const auto& t : terms_)
    if (t.first.weight() == weight) out.terms_.insert(out.terms_.end(), t);
  return out;
}

Poly Poly::conj() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.conj(), c.conj());
  return out;
}

Poly Poly::diff(Var v) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    int e = m[v];
    if (e == 0) continue;
    Monomial r = m;
    r.set(v, e - 1);
    out.add_term(r, c * GaussRational(e));
  }
  return out;
}

Poly Poly::substitute(Var v, const Poly& value) const {
  int top = degree_in(v);
  if (top == 0) return *this;
  // Horner in v over coefficient polynomials.
  Poly out = coeff_in(v, top);
  for (int k = top - 1; k >= 0; --k) out = out * value + coeff_in(v, k);
  return out;
}

Poly Poly::reduce_s() const {
  if (degree_in(Var::S) <= 1) return *this;
  const Poly q = pow(vars::z() * vars::zb(), 2) + pow(vars::u(), 2);
  Poly out;
  for (const auto& [m, c] : terms_) {
    int e = m[Var::S];
    Monomial r = m;
    r.set(Var::S, e % 2);
    Poly t = term(r, c);
    if (e >= 2) t = t * pow(q, e / 2);
    out += t;
  }
  return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Poly::divide_exact by zero");
  if (is_zero()) return Poly{};
  const auto& [lm, lc] = divisor.leading();
  const GaussRational lc_inv = lc.inverse();
  Poly rem = *this;
  Poly quot;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    if (!lm.divides(rm)) return std::nullopt;
    Monomial qm = lm.quotient_of(rm);
    GaussRational qc = rc * lc_inv;
    quot.add_term(qm, qc);
    for (const auto& [dm, dc] : divisor.terms_) rem.add_term(qm * dm, -(qc * dc));
  }
  return quot;
}

GaussRational Poly::make_monic() {
  if (terms_.empty()) return GaussRational(1);
  GaussRational lc = leading().second;
  if (!lc.is_one()) {
    GaussRational inv = lc.inverse();
    for (auto& [m, c] : terms_) c *= inv;
  }
  return lc;
}

std::complex<double> Poly::eval(const PointValue& p) const {
  const std::complex<double> sval = p.s();
  const std::array<std::complex<double>, kNumVars> base{
      p.z, p.zb, {p.u, 0}, {p.v, 0}, sval, {p.tau, 0}, {std::numbers::pi, 0}};
  std::complex<double> acc = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int k = 0; k < kNumVars; ++k)
      for (int e = 0; e < m.exps()[k]; ++e) t *= base[k];
    acc += t;
  }
  return acc;
}

void Poly::add_term(const Monomial& m, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool operator<(const Poly& a, const Poly& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

Poly pow(const Poly& p, int exponent) {
  if (exponent < 0) throw std::domain_error("Poly pow: negative exponent");
  Poly result(1);
  Poly b = p;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print in ascending weight so low-order terms come first.
  std::vector<std::pair<Monomial, GaussRational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return x.first.weight() < y.first.weight(); });
  for (const auto& [m, c] : sorted) {
    std::string cs = c.to_string();
    bool neg = c.is_real() && sgn(c.re()) < 0;
    if (neg) cs = (-c).to_string();
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (m.is_one()) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << m.to_string();
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace crprime
