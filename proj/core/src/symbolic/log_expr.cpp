#include "crprime/symbolic/log_expr.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crprime {

LogMonomial LogMonomial::atom(const Poly& arg) {
  if (arg.is_zero()) throw std::domain_error("log of zero");
  LogMonomial m;
  m.powers_[arg] = 1;
  return m;
}

int LogMonomial::degree() const {
  int d = 0;
  for (const auto& [a, e] : powers_) d += e;
  return d;
}

LogMonomial LogMonomial::conj() const {
  LogMonomial m;
  for (const auto& [a, e] : powers_) m.powers_[a.conj()] += e;
  return m;
}

LogMonomial operator*(const LogMonomial& a, const LogMonomial& b) {
  LogMonomial m = a;
  for (const auto& [x, e] : b.powers_) m.powers_[x] += e;
  return m;
}

std::string LogMonomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, e] : powers_) {
    if (!first) os << "*";
    first = false;
    os << "log(" << a.to_string() << ")";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

LogExpr::LogExpr(const RatFunc& r) {
  if (!r.is_zero()) terms_.emplace(LogMonomial{}, r);
}

LogExpr LogExpr::log(const Poly& arg) {
  LogExpr e;
  e.terms_.emplace(LogMonomial::atom(arg), RatFunc(1));
  return e;
}

LogExpr LogExpr::log_zeta() { return log(vars::zeta()); }
LogExpr LogExpr::log_zeta_bar() { return log(vars::zeta_bar()); }

LogExpr LogExpr::log_s() {
  LogExpr e = log_zeta() + log_zeta_bar();
  e *= GaussRational(1, 2, 0, 1);
  return e;
}

RatFunc LogExpr::rational_part() const {
  auto it = terms_.find(LogMonomial{});
  return it == terms_.end() ? RatFunc{} : it->second;
}

bool LogExpr::has_logs() const {
  for (const auto& [m, c] : terms_)
    if (!m.is_one()) return true;
  return false;
}

void LogExpr::add_term(const LogMonomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool LogExpr::is_zero() const {
  std::vector<Poly> atoms;
  for (const auto& [m, c] : terms_)
    for (const auto& [a, e] : m.powers())
      if (!a.is_constant() && std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = 0; j < atoms.size(); ++j)
      if (i != j && atoms[j].divide_exact(atoms[i]))
        throw std::invalid_argument("LogExpr: dependent log atoms log(" + atoms[i].to_string() + "), log(" +
                                    atoms[j].to_string() + ")");
  // Coefficients are kept nonzero by add_term.
  return terms_.empty();
}

LogExpr LogExpr::conj() const {
  LogExpr out;
  for (const auto& [m, c] : terms_) out.add_term(m.conj(), c.conj());
  return out;
}

LogExpr LogExpr::diff(Var v) const {
  LogExpr out;
  for (const auto& [m, c] : terms_) {
    out.add_term(m, c.diff(v));
    for (const auto& [a, e] : m.powers()) {
      Poly da = a.diff(v);
      if (da.is_zero()) continue;
      LogMonomial rest = m;
      if (e == 1) {
        rest.powers_.erase(a);
      } else {
        rest.powers_[a] = e - 1;
      }
      out.add_term(rest, c * RatFunc::fraction(da * GaussRational(e), a));
    }
  }
  return out;
}

LogExpr LogExpr::inverse() const {
  if (has_logs()) throw std::domain_error("LogExpr::inverse: expression contains logarithms");
  return LogExpr(rational_part().inverse());
}

std::complex<double> LogExpr::eval(const PointValue& p) const {
  std::complex<double> total = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> v = c.eval(p);
    for (const auto& [a, e] : m.powers()) v *= std::pow(std::log(a.eval(p)), e);
    total += v;
  }
  return total;
}

LogExpr& LogExpr::operator+=(const LogExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LogExpr& LogExpr::operator-=(const LogExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LogExpr& LogExpr::operator*=(const LogExpr& o) {
  LogExpr out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
  return *this = std::move(out);
}

LogExpr& LogExpr::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, r] : terms_) r *= RatFunc(c);
  return *this;
}

LogExpr LogExpr::operator-() const {
  LogExpr out = *this;
  out *= GaussRational(-1);
  return out;
}

std::string LogExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (!m.is_one()) os << "*" << m.to_string();
  }
  return os.str();
}

RatFunc exp_of_logs(const LogExpr& y) {
  RatFunc out(1);
  mpq_class zeta_exp = 0, zeta_bar_exp = 0;
  for (const auto& [m, c] : y.terms()) {
    if (m.degree() != 1) throw std::domain_error("exp: not a linear combination of log atoms");
    if (!c.is_constant()) throw std::domain_error("exp: non-constant coefficient of a log atom");
    GaussRational k = c.numerator().constant_term();
    if (!k.is_real()) throw std::domain_error("exp: non-real coefficient of a log atom");
    const Poly& arg = m.powers().begin()->first;
    if (arg == vars::zeta()) {
      zeta_exp = k.re();
      continue;
    }
    if (arg == vars::zeta_bar()) {
      zeta_bar_exp = k.re();
      continue;
    }
    if (k.re().get_den() != 1) throw std::domain_error("exp: fractional power of " + arg.to_string());
    out *= pow(RatFunc(arg), static_cast<int>(k.re().get_num().get_si()));
  }
  if (zeta_exp != zeta_bar_exp) {
    // Integer powers of zeta and zeta-bar separately.
    if (zeta_exp.get_den() != 1 || zeta_bar_exp.get_den() != 1)
      throw std::domain_error("exp: fractional power of zeta");
    out *= pow(RatFunc(vars::zeta()), static_cast<int>(zeta_exp.get_num().get_si()));
    out *= pow(RatFunc(vars::zeta_bar()), static_cast<int>(zeta_bar_exp.get_num().get_si()));
    return out;
  }
  mpq_class twice = 2 * zeta_exp;
  if (twice.get_den() != 1) throw std::domain_error("exp: fractional power of s");
  out *= pow(RatFunc(vars::s()), static_cast<int>(twice.get_num().get_si()));
  return out;
}

std::ostream& operator<<(std::ostream& os, const LogExpr& e) { return os << e.to_string(); }

}  // namespace crprime
