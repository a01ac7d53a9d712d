#pragma once

#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <string>

#include "crprime/symbolic/graded_series.hpp"
#include "crprime/symbolic/log_expr.hpp"

namespace crprime {

/// Coordinate basis index: 0 = dz, 1 = dzb, 2 = du.
inline constexpr std::array<Var, 3> kCoordVar{Var::Z, Var::ZB, Var::U};

/// Basis element of the exterior algebra encoded as a bitmask over
/// {dz, dzb, du}; the wedge order is increasing bit index.
namespace mask {
inline constexpr unsigned dz = 1, dzb = 2, du = 4;
inline constexpr unsigned dz_dzb = 3, dz_du = 5, dzb_du = 6, vol = 7;
}  // namespace mask

/// Sign of dx_a ^ dx_b relative to the sorted wedge of a | b (a & b == 0).
inline int merge_sign(unsigned a, unsigned b) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    if (a & (1u << i)) inversions += std::popcount(b & ((1u << i) - 1));
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Image of a basis mask under the conjugation dz <-> dzb, with the sign
/// needed to re-sort the result.
inline std::pair<unsigned, int> conj_mask(unsigned m) {
  unsigned out = (m & mask::du) | ((m & mask::dz) ? mask::dzb : 0u) | ((m & mask::dzb) ? mask::dz : 0u);
  int sign = ((m & mask::dz) && (m & mask::dzb)) ? -1 : 1;
  return {out, sign};
}

template <class S>
class VectorField {
 public:
  VectorField() = default;
  VectorField(S xz, S xzb, S xu) : c_{std::move(xz), std::move(xzb), std::move(xu)} {}

  const S& operator[](int k) const { return c_[k]; }
  S& operator[](int k) { return c_[k]; }

  /// Directional derivative X f.
  S apply(const S& f) const {
    S out;
    for (int k = 0; k < 3; ++k)
      if (!c_[k].is_zero()) out += c_[k] * f.diff(kCoordVar[k]);
    return out;
  }
  VectorField conj() const { return {c_[1].conj(), c_[0].conj(), c_[2].conj()}; }

  friend VectorField operator*(const S& f, const VectorField& x) { return {f * x.c_[0], f * x.c_[1], f * x.c_[2]}; }
  friend VectorField operator+(const VectorField& a, const VectorField& b) {
    return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]};
  }
  friend VectorField operator-(const VectorField& a, const VectorField& b) {
    return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]};
  }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

 private:
  std::array<S, 3> c_{};
};

/// Exterior form of fixed degree over the coordinate coframe {dz, dzb, du}.
template <class S>
class DifferentialForm {
 public:
  explicit DifferentialForm(int degree = 0) : degree_(degree) {
    if (degree < 0 || degree > 3) throw std::invalid_argument("form degree must be in [0, 3]");
  }
  static DifferentialForm scalar(S f) {
    DifferentialForm out(0);
    out.c_[0] = std::move(f);
    return out;
  }
  static DifferentialForm one_form(S fz, S fzb, S fu) {
    DifferentialForm out(1);
    out.c_[mask::dz] = std::move(fz);
    out.c_[mask::dzb] = std::move(fzb);
    out.c_[mask::du] = std::move(fu);
    return out;
  }
  /// Coordinate differential dx_k.
  static DifferentialForm basis(unsigned m) {
    DifferentialForm out(std::popcount(m));
    out.c_[m] = S(GaussRational(1));
    return out;
  }

  int degree() const { return degree_; }
  const S& operator[](unsigned m) const { return c_[m]; }
  S& operator[](unsigned m) {
    if (static_cast<int>(std::popcount(m)) != degree_) throw std::out_of_range("basis mask of wrong degree");
    return c_[m];
  }

  bool is_zero() const {
    for (unsigned m = 0; m < 8; ++m)
      if (std::popcount(m) == degree_ && !c_[m].is_zero()) return false;
    return true;
  }

  DifferentialForm conj() const {
    DifferentialForm out(degree_);
    for (unsigned m = 0; m < 8; ++m) {
      if (std::popcount(m) != degree_ || c_[m].is_zero()) continue;
      auto [cm, sign] = conj_mask(m);
      out.c_[cm] = sign > 0 ? c_[m].conj() : -c_[m].conj();
    }
    return out;
  }

  DifferentialForm& operator+=(const DifferentialForm& o) {
    check_degree(o);
    for (unsigned m = 0; m < 8; ++m) c_[m] += o.c_[m];
    return *this;
  }
  DifferentialForm& operator-=(const DifferentialForm& o) {
    check_degree(o);
    for (unsigned m = 0; m < 8; ++m) c_[m] -= o.c_[m];
    return *this;
  }
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  friend DifferentialForm operator*(const S& f, const DifferentialForm& a) {
    DifferentialForm out(a.degree_);
    for (unsigned m = 0; m < 8; ++m)
      if (!a.c_[m].is_zero()) out.c_[m] = f * a.c_[m];
    return out;
  }
  DifferentialForm operator-() const { return S(GaussRational(-1)) * *this; }

  std::string to_string() const {
    static const char* names[8] = {"1", "dz", "dzb", "dz^dzb", "du", "dz^du", "dzb^du", "dz^dzb^du"};
    std::ostringstream os;
    bool first = true;
    for (unsigned m = 0; m < 8; ++m) {
      if (std::popcount(m) != degree_ || c_[m].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[m].to_string() << ")" << names[m];
    }
    return first ? "0" : os.str();
  }

 private:
  void check_degree(const DifferentialForm& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("adding forms of different degree");
  }
  int degree_;
  std::array<S, 8> c_{};
};

template <class S>
DifferentialForm<S> wedge(const DifferentialForm<S>& a, const DifferentialForm<S>& b) {
  if (a.degree() + b.degree() > 3) return DifferentialForm<S>(std::min(a.degree() + b.degree(), 3));
  DifferentialForm<S> out(a.degree() + b.degree());
  for (unsigned ma = 0; ma < 8; ++ma) {
    if (std::popcount(ma) != a.degree() || a[ma].is_zero()) continue;
    for (unsigned mb = 0; mb < 8; ++mb) {
      if (std::popcount(mb) != b.degree() || (ma & mb) || b[mb].is_zero()) continue;
      S term = a[ma] * b[mb];
      if (merge_sign(ma, mb) < 0) term = -term;
      out[ma | mb] += term;
    }
  }
  return out;
}

template <class S>
DifferentialForm<S> exterior_d(const DifferentialForm<S>& a) {
  if (a.degree() == 3) return DifferentialForm<S>(3);
  DifferentialForm<S> out(a.degree() + 1);
  for (unsigned m = 0; m < 8; ++m) {
    if (std::popcount(m) != a.degree() || a[m].is_zero()) continue;
    for (int k = 0; k < 3; ++k) {
      unsigned bit = 1u << k;
      if (m & bit) continue;
      S dk = a[m].diff(kCoordVar[k]);
      if (dk.is_zero()) continue;
      if (merge_sign(bit, m) < 0) dk = -dk;
      out[m | bit] += dk;
    }
  }
  return out;
}

/// Interior product i_X a.
template <class S>
DifferentialForm<S> interior(const VectorField<S>& x, const DifferentialForm<S>& a) {
  if (a.degree() == 0) throw std::invalid_argument("interior product of a 0-form");
  DifferentialForm<S> out(a.degree() - 1);
  for (unsigned m = 0; m < 8; ++m) {
    if (std::popcount(m) != a.degree() || a[m].is_zero()) continue;
    int position = 0;
    for (int k = 0; k < 3; ++k) {
      unsigned bit = 1u << k;
      if (!(m & bit)) continue;
      if (!x[k].is_zero()) {
        S term = x[k] * a[m];
        if (position % 2 == 1) term = -term;
        out[m & ~bit] += term;
      }
      ++position;
    }
  }
  return out;
}

/// a(X) for a 1-form.
template <class S>
S pair(const DifferentialForm<S>& a, const VectorField<S>& x) {
  return interior(x, a)[0];
}

/// a(X, Y) for a 2-form, with (a ^ b)(X, Y) = a(X) b(Y) - a(Y) b(X).
template <class S>
S pair(const DifferentialForm<S>& a, const VectorField<S>& x, const VectorField<S>& y) {
  return interior(y, interior(x, a))[0];
}

/// a(X, Y, W) for a 3-form.
template <class S>
S pair(const DifferentialForm<S>& a, const VectorField<S>& x, const VectorField<S>& y, const VectorField<S>& w) {
  return interior(w, interior(y, interior(x, a)))[0];
}

/// Reeb field of a contact form: theta(T) = 1 and i_T d theta = 0.
/// Throws std::domain_error if theta ^ d theta vanishes.
template <class S>
VectorField<S> reeb_field(const DifferentialForm<S>& theta) {
  if (theta.degree() != 1) throw std::invalid_argument("reeb_field: expected a 1-form");
  DifferentialForm<S> w = exterior_d(theta);
  // Kernel of the 2-form w in three dimensions.
  VectorField<S> k(w[mask::dzb_du], -w[mask::dz_du], w[mask::dz_dzb]);
  S norm = pair(theta, k);
  if (norm.is_zero()) throw std::domain_error("reeb_field: contact condition fails");
  return norm.inverse() * k;
}

/// Coframe {theta, theta^1, theta^1bar} with its dual frame {T, Z_1, Z_1bar}.
template <class S>
struct AdaptedCoframe {
  DifferentialForm<S> theta{1};
  DifferentialForm<S> theta1{1};
  DifferentialForm<S> theta1bar{1};
  VectorField<S> t, z1, z1bar;
  S determinant;

  /// Builds the dual frame by a 3x3 adjugate solve. Throws
  /// std::domain_error if the coframe is singular.
  static AdaptedCoframe from_forms(const DifferentialForm<S>& theta, const DifferentialForm<S>& theta1);

  /// Components of a form over {theta, theta^1, theta^1bar}; the mask bits
  /// refer to (theta, theta^1, theta^1bar) in that order.
  std::array<S, 8> expand(const DifferentialForm<S>& a) const;
  DifferentialForm<S> reassemble(const std::array<S, 8>& comps, int degree) const;
};

template <class S>
AdaptedCoframe<S> AdaptedCoframe<S>::from_forms(const DifferentialForm<S>& theta, const DifferentialForm<S>& theta1) {
  AdaptedCoframe<S> cf;
  cf.theta = theta;
  cf.theta1 = theta1;
  cf.theta1bar = theta1.conj();
  const DifferentialForm<S>* rows[3] = {&cf.theta, &cf.theta1, &cf.theta1bar};
  auto m = [&](int r, int c) -> const S& { return (*rows[r])[1u << c]; };
  auto minor = [&](int r0, int r1, int c0, int c1) { return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0); };
  cf.determinant = m(0, 0) * minor(1, 2, 1, 2) - m(0, 1) * minor(1, 2, 0, 2) + m(0, 2) * minor(1, 2, 0, 1);
  if (cf.determinant.is_zero()) throw std::domain_error("AdaptedCoframe: singular coframe");
  S inv = cf.determinant.inverse();
  // Column j of the inverse matrix is the dual vector of row j.
  std::array<VectorField<S>, 3> dual;
  for (int j = 0; j < 3; ++j) {
    int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
    for (int c = 0; c < 3; ++c) {
      int c0 = (c + 1) % 3, c1 = (c + 2) % 3;
      dual[j][c] = inv * (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0));
    }
  }
  cf.t = dual[0];
  cf.z1 = dual[1];
  cf.z1bar = dual[2];
  return cf;
}

template <class S>
std::array<S, 8> AdaptedCoframe<S>::expand(const DifferentialForm<S>& a) const {
  const VectorField<S>* frame[3] = {&t, &z1, &z1bar};
  std::array<S, 8> out{};
  for (unsigned m = 0; m < 8; ++m) {
    if (std::popcount(m) != a.degree()) continue;
    int idx[3], n = 0;
    for (int k = 0; k < 3; ++k)
      if (m & (1u << k)) idx[n++] = k;
    switch (n) {
      case 0: out[m] = a[0]; break;
      case 1: out[m] = pair(a, *frame[idx[0]]); break;
      case 2: out[m] = pair(a, *frame[idx[0]], *frame[idx[1]]); break;
      default: out[m] = pair(a, *frame[0], *frame[1], *frame[2]); break;
    }
  }
  return out;
}

template <class S>
DifferentialForm<S> AdaptedCoframe<S>::reassemble(const std::array<S, 8>& comps, int degree) const {
  const DifferentialForm<S>* cof[3] = {&theta, &theta1, &theta1bar};
  DifferentialForm<S> out(degree);
  for (unsigned m = 0; m < 8; ++m) {
    if (std::popcount(m) != degree || comps[m].is_zero()) continue;
    DifferentialForm<S> basis = DifferentialForm<S>::scalar(S(GaussRational(1)));
    for (int k = 0; k < 3; ++k)
      if (m & (1u << k)) basis = wedge(basis, *cof[k]);
    out += comps[m] * basis;
  }
  return out;
}

extern template class DifferentialForm<LogExpr>;
extern template class DifferentialForm<GradedSeries>;
extern template class VectorField<LogExpr>;
extern template class VectorField<GradedSeries>;
extern template struct AdaptedCoframe<LogExpr>;
extern template struct AdaptedCoframe<GradedSeries>;

}  // namespace crprime
