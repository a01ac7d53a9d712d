#include "crprime/structure/structure.hpp"

#include <stdexcept>

namespace crprime {

namespace {

template <class S>
S c(long re, long im = 0) {
  return S(GaussRational(re, 1, im, 1));
}

template <class S>
S i_unit() {
  return S(GaussRational::i());
}

}  // namespace

template <class S>
PseudohermitianStructure<S> solve_structure(const DifferentialForm<S>& theta,
                                            const std::optional<DifferentialForm<S>>& theta1_hint) {
  if (theta.degree() != 1) throw std::invalid_argument("solve_structure: theta must be a 1-form");
  PseudohermitianStructure<S> st;
  st.theta = theta;
  st.t = reeb_field(theta);
  const DifferentialForm<S> dtheta = exterior_d(theta);

  if (theta1_hint) {
    auto cf = AdaptedCoframe<S>::from_forms(theta, *theta1_hint);
    st.theta1 = *theta1_hint;
    st.z1 = cf.z1;
    auto comps = cf.expand(dtheta);
    // Bits: theta = 1, theta^1 = 2, theta^1bar = 4.
    if (!comps[1 | 2].is_zero() || !comps[1 | 4].is_zero())
      throw std::domain_error("solve_structure: hinted theta^1 is not admissible");
  } else {
    const S& tz = st.t[0];
    st.theta1 = DifferentialForm<S>::basis(mask::dz) - tz * theta;
    const S& th_u = theta[mask::du];
    if (th_u.is_zero()) throw std::domain_error("solve_structure: theta has no du component");
    st.z1 = VectorField<S>(c<S>(1), S{}, -(theta[mask::dz] * th_u.inverse()));
  }

  const VectorField<S> z1b = st.z1bar();
  st.g = -(i_unit<S>() * pair(dtheta, st.z1, z1b));
  if (st.g.is_zero()) throw std::domain_error("solve_structure: degenerate Levi form");
  st.g_inv = st.g.inverse();

  const DifferentialForm<S> dtheta1 = exterior_d(st.theta1);
  S alpha = pair(dtheta1, st.z1, z1b);
  S beta = pair(dtheta1, st.t, st.z1);
  S gamma = pair(dtheta1, st.t, z1b);
  st.gamma1bar = alpha;
  st.gamma0 = -beta;
  st.torsion = gamma;
  st.gamma1 = st.z1.apply(st.g) * st.g_inv - alpha.conj();
  st.a11 = st.g * gamma.conj();

  const DifferentialForm<S> domega = exterior_d(st.omega());
  st.r = pair(domega, st.z1, z1b) * st.g_inv;
  return st;
}

template <class S>
StructureResiduals<S> structure_residuals(const PseudohermitianStructure<S>& st) {
  StructureResiduals<S> res;
  const auto th1b = st.theta1bar();
  const auto omega = st.omega();
  res.d_theta = exterior_d(st.theta) - (i_unit<S>() * st.g) * wedge(st.theta1, th1b);
  res.d_theta1 = exterior_d(st.theta1) - wedge(st.theta1, omega) - st.torsion * wedge(st.theta, th1b);
  res.metric = exterior_d(DifferentialForm<S>::scalar(st.g)) - st.g * omega - st.g * omega.conj();
  res.curvature = pair(exterior_d(omega), st.z1, st.z1bar()) - st.r * st.g;
  res.reeb_theta = pair(st.theta, st.t) - c<S>(1);
  res.reeb_d_theta = interior(st.t, exterior_d(st.theta));
  return res;
}

std::vector<Index> parse_index_pattern(const std::string& pattern) {
  std::vector<Index> out;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (pattern[k] == '1') {
      if (k + 1 < pattern.size() && pattern[k + 1] == 'b') {
        out.push_back(Index::OneBar);
        ++k;
      } else {
        out.push_back(Index::One);
      }
    } else if (pattern[k] == '0') {
      out.push_back(Index::Zero);
    } else {
      throw std::invalid_argument("covariant_derivative: bad index pattern '" + pattern + "'");
    }
  }
  if (out.empty() || out.size() > 4)
    throw std::invalid_argument("covariant_derivative: pattern must have 1 to 4 indices");
  return out;
}

template <class S>
Component<S> covariant_step(const PseudohermitianStructure<S>& st, const Component<S>& sigma, Index x) {
  Component<S> out{S{}, sigma.n, sigma.m};
  S om, om_bar;
  switch (x) {
    case Index::One:
      out.value = st.z1.apply(sigma.value);
      om = st.gamma1;
      om_bar = st.gamma1bar.conj();
      ++out.n;
      break;
    case Index::OneBar:
      out.value = st.z1bar().apply(sigma.value);
      om = st.gamma1bar;
      om_bar = st.gamma1.conj();
      ++out.m;
      break;
    case Index::Zero:
      out.value = st.t.apply(sigma.value);
      om = st.gamma0;
      om_bar = st.gamma0.conj();
      break;
  }
  if (sigma.n != 0) out.value -= c<S>(sigma.n) * om * sigma.value;
  if (sigma.m != 0) out.value -= c<S>(sigma.m) * om_bar * sigma.value;
  return out;
}

template <class S>
S covariant_derivative(const PseudohermitianStructure<S>& st, const S& f, const std::string& pattern) {
  Component<S> sigma{f, 0, 0};
  for (Index x : parse_index_pattern(pattern)) sigma = covariant_step(st, sigma, x);
  return sigma.value;
}

template <class S>
S sublaplacian(const PseudohermitianStructure<S>& st, const S& f) {
  return st.g_inv * (covariant_derivative(st, f, "11b") + covariant_derivative(st, f, "1b1"));
}

template <class S>
S cr_laplacian(const PseudohermitianStructure<S>& st, const S& f) {
  return c<S>(-4) * sublaplacian(st, f) + st.r * f;
}

template <class S>
S p3_operator(const PseudohermitianStructure<S>& st, const S& f) {
  S f1b = st.z1bar().apply(f);
  S lap = st.g_inv * covariant_derivative(st, f, "1b1");
  return st.z1.apply(lap) + i_unit<S>() * st.a11 * st.g_inv * f1b;
}

namespace {

// (A_11 f^1)_{,1bar} raised: g^{-1} (A_11 g^{-1} f_1bar)_{,1bar}.
template <class S>
S torsion_divergence(const PseudohermitianStructure<S>& st, const S& f) {
  Component<S> sigma{st.a11 * st.g_inv * st.z1bar().apply(f), 1, 0};
  return st.g_inv * covariant_step(st, sigma, Index::OneBar).value;
}

// g^{-1} (R f_1)_{,1bar}.
template <class S>
S curvature_divergence(const PseudohermitianStructure<S>& st, const S& f) {
  Component<S> sigma{st.r * st.z1.apply(f), 1, 0};
  return st.g_inv * covariant_step(st, sigma, Index::OneBar).value;
}

}  // namespace

template <class S>
S paneitz(const PseudohermitianStructure<S>& st, const S& f, PaneitzConvention conv) {
  if (conv == PaneitzConvention::Body) {
    Component<S> sigma{p3_operator(st, f), 1, 0};
    return c<S>(4) * st.g_inv * covariant_step(st, sigma, Index::OneBar).value;
  }
  S lap = sublaplacian(st, f);
  return sublaplacian(st, lap) + st.t.apply(st.t.apply(f)) - c<S>(4) * im(torsion_divergence(st, f));
}

template <class S>
S p_prime(const PseudohermitianStructure<S>& st, const S& f) {
  S lap = sublaplacian(st, f);
  return c<S>(4) * sublaplacian(st, lap) - c<S>(8) * im(torsion_divergence(st, f)) -
         c<S>(4) * re(curvature_divergence(st, f));
}

template <class S>
S torsion_norm_squared(const PseudohermitianStructure<S>& st) {
  return st.a11 * st.a11.conj() * st.g_inv * st.g_inv;
}

template <class S>
S q_prime(const PseudohermitianStructure<S>& st) {
  return c<S>(-2) * sublaplacian(st, st.r) + st.r * st.r - c<S>(4) * torsion_norm_squared(st);
}

template <class S>
S pseudo_einstein_tensor(const PseudohermitianStructure<S>& st) {
  Component<S> a{st.a11, 2, 0};
  S div = covariant_step(st, a, Index::OneBar).value;
  return st.z1.apply(st.r) - i_unit<S>() * st.g_inv * div;
}

template <class S>
S torsion_tensor_zz(const PseudohermitianStructure<S>& st) {
  const S& t1z = st.theta1[mask::dz];
  return st.a11 * t1z * t1z;
}

template <class S>
PseudohermitianStructure<S> conformal_change(const PseudohermitianStructure<S>& st, const S& upsilon) {
  if (upsilon.is_zero()) return st;
  S factor = scalar_exp(upsilon);
  return solve_structure(factor * st.theta);
}

template <class S>
TorsionTransform<S> torsion_transform(const PseudohermitianStructure<S>& st, const S& upsilon) {
  const S half(GaussRational(1, 2, 0, 1));
  S f = half * upsilon;
  S f1 = st.z1.apply(f);
  S bracket = st.a11 + c<S>(0, 2) * covariant_derivative(st, f, "11") - c<S>(0, 4) * f1 * f1;
  S f_up = st.g_inv * st.z1bar().apply(f);
  S coef = st.theta1[mask::dz] + c<S>(0, 2) * f_up * st.theta[mask::dz];
  TorsionTransform<S> out;
  out.tensor_zz = bracket * coef * coef;
  out.a11_hat = upsilon.is_zero() ? bracket : scalar_exp(-upsilon) * bracket;
  return out;
}

template <class S>
S qprime_conformal_rhs(const PseudohermitianStructure<S>& st, const S& y) {
  S p_y = paneitz(st, y, PaneitzConvention::Body);
  S last = st.g_inv * st.z1bar().apply(y) * p3_operator(st, y);
  return q_prime(st) + p_prime(st, y) + S(GaussRational(1, 2, 0, 1)) * paneitz(st, y * y, PaneitzConvention::Body) -
         y * p_y - c<S>(16) * re(last);
}

#define CRPRIME_INSTANTIATE(S)                                                                                  \
  template PseudohermitianStructure<S> solve_structure(const DifferentialForm<S>&,                             \
                                                       const std::optional<DifferentialForm<S>>&);             \
  template StructureResiduals<S> structure_residuals(const PseudohermitianStructure<S>&);                     \
  template Component<S> covariant_step(const PseudohermitianStructure<S>&, const Component<S>&, Index);        \
  template S covariant_derivative(const PseudohermitianStructure<S>&, const S&, const std::string&);          \
  template S sublaplacian(const PseudohermitianStructure<S>&, const S&);                                      \
  template S cr_laplacian(const PseudohermitianStructure<S>&, const S&);                                      \
  template S p3_operator(const PseudohermitianStructure<S>&, const S&);                                       \
  template S paneitz(const PseudohermitianStructure<S>&, const S&, PaneitzConvention);                        \
  template S p_prime(const PseudohermitianStructure<S>&, const S&);                                           \
  template S torsion_norm_squared(const PseudohermitianStructure<S>&);                                        \
  template S q_prime(const PseudohermitianStructure<S>&);                                                     \
  template S pseudo_einstein_tensor(const PseudohermitianStructure<S>&);                                      \
  template S torsion_tensor_zz(const PseudohermitianStructure<S>&);                                           \
  template PseudohermitianStructure<S> conformal_change(const PseudohermitianStructure<S>&, const S&);        \
  template TorsionTransform<S> torsion_transform(const PseudohermitianStructure<S>&, const S&);               \
  template S qprime_conformal_rhs(const PseudohermitianStructure<S>&, const S&);

CRPRIME_INSTANTIATE(LogExpr)
CRPRIME_INSTANTIATE(GradedSeries)

#undef CRPRIME_INSTANTIATE

}  // namespace crprime
