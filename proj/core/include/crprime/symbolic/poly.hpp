#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "crprime/symbolic/gauss_rational.hpp"

namespace crprime {

/// Generators of the polynomial ring.
///
/// z, zb, u are the CR chart coordinates (zb is the formal conjugate of z).
/// v is the transverse coordinate Im w, used only when working off the
/// hypersurface. s stands for rho^2 = (|z|^4 + u^2)^{1/2} and is reduced
/// against s^2 = (z zb)^2 + u^2 by the rational layer. tau is a real grading
/// marker of weight -1 (used to make a concrete E formally homogeneous).
/// pi is the transcendental constant, kept symbolic.
enum class Var : std::uint8_t { Z = 0, ZB, U, V, S, Tau, Pi };

inline constexpr int kNumVars = 7;

/// Anisotropic weight: z, zb count 1; u, v, s count 2; tau counts -1.
inline constexpr std::array<int, kNumVars> kVarWeight{1, 1, 2, 2, 2, -1, 0};

const char* var_name(Var v);

struct PointValue;

class Monomial {
 public:
  using Exps = std::array<std::uint16_t, kNumVars>;

  Monomial() { exps_.fill(0); }
  explicit Monomial(const Exps& e) : exps_(e) {}
  static Monomial of(Var v, int power = 1);
  /// z^a zb^b u^c.
  static Monomial zzu(int a, int b, int c);

  int operator[](Var v) const { return exps_[static_cast<int>(v)]; }
  void set(Var v, int e) { exps_[static_cast<int>(v)] = static_cast<std::uint16_t>(e); }
  const Exps& exps() const { return exps_; }

  bool is_one() const;
  int weight() const;
  int total_degree() const;
  Monomial conj() const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  /// Lexicographic on (z, zb, u, v, s, tau, pi); a valid monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

  std::string to_string() const;

 private:
  Exps exps_;
};

/// Numerical evaluation point. zb is taken independently so that formal
/// conjugates can be probed; physical points use zb = conj(z).
struct PointValue {
  std::complex<double> z, zb;
  double u = 0, v = 0;
  double tau = 1;

  static PointValue physical(std::complex<double> z, double u, double v = 0) {
    return {z, std::conj(z), u, v, 1.0};
  }
  std::complex<double> s() const;
};

/// Sparse multivariate polynomial over Q(i). No zero coefficients are stored.
class Poly {
 public:
  using Terms = std::map<Monomial, GaussRational>;

  Poly() = default;
  Poly(const GaussRational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(GaussRational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(Var v);
  static Poly term(const Monomial& m, const GaussRational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  GaussRational coeff(const Monomial& m) const;
  GaussRational constant_term() const { return coeff(Monomial{}); }
  /// Largest monomial under the lex order, with its coefficient.
  const std::pair<const Monomial, GaussRational>& leading() const;

  bool depends_on(Var v) const;
  int degree_in(Var v) const;
  /// Coefficient of v^k, as a polynomial in the remaining variables.
  Poly coeff_in(Var v, int k) const;
  int min_weight() const;
  int max_weight() const;
  /// Drop monomials of weight >= order.
  Poly truncated(int order) const;
  /// Keep only monomials of the given weight.
  Poly homogeneous_part(int weight) const;

  Poly conj() const;
  /// Formal partial derivative; every generator is independent here.
  Poly diff(Var v) const;
  Poly substitute(Var v, const Poly& value) const;
  /// Replace s^2 by (z zb)^2 + u^2 until the s-degree is at most 1.
  Poly reduce_s() const;
  bool is_real() const { return *this == conj(); }

  /// Exact division; nullopt if divisor does not divide *this.
  std::optional<Poly> divide_exact(const Poly& divisor) const;
  /// Multiply by the inverse of the leading coefficient; returns that coefficient.
  GaussRational make_monic();

  std::complex<double> eval(const PointValue& p) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussRational& c);
  void add_term(const Monomial& m, const GaussRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussRational& c) { return a *= c; }
  friend Poly operator*(const GaussRational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  Terms terms_;
};

Poly pow(const Poly& p, int exponent);

std::ostream& operator<<(std::ostream& os, const Poly& p);

namespace vars {
inline Poly z() { return Poly::var(Var::Z); }
inline Poly zb() { return Poly::var(Var::ZB); }
inline Poly u() { return Poly::var(Var::U); }
inline Poly v() { return Poly::var(Var::V); }
inline Poly s() { return Poly::var(Var::S); }
inline Poly tau() { return Poly::var(Var::Tau); }
inline Poly pi() { return Poly::var(Var::Pi); }
inline Poly i() { return Poly(GaussRational::i()); }
/// zeta = |z|^2 - i u, the CR function of the Heisenberg group.
inline Poly zeta() { return z() * zb() - i() * u(); }
inline Poly zeta_bar() { return z() * zb() + i() * u(); }
}  // namespace vars

}  // namespace crprime
