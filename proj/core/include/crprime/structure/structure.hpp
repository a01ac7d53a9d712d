#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crprime/exterior/forms.hpp"

namespace crprime {

/// Solved pseudohermitian structure of a contact form theta.
///
/// Connection components: Gamma_1 = omega(Z_1), Gamma_1bar = omega(Z_1bar),
/// Gamma_0 = omega(T), where omega = omega_1^1. torsion is A^1_1bar and
/// a11 the lowered A_11 = g * conj(A^1_1bar).
template <class S>
struct PseudohermitianStructure {
  DifferentialForm<S> theta{1};
  DifferentialForm<S> theta1{1};
  VectorField<S> t, z1;
  S g, g_inv;
  S gamma1, gamma1bar, gamma0;
  S torsion;
  S a11;
  S r;

  VectorField<S> z1bar() const { return z1.conj(); }
  DifferentialForm<S> theta1bar() const { return theta1.conj(); }
  DifferentialForm<S> omega() const {
    return gamma1 * theta1 + gamma1bar * theta1bar() + gamma0 * theta;
  }
};

/// Solves the structure equations. Without a hint, theta^1 = dz - T^z theta
/// and Z_1 = d_z - (theta_z / theta_u) d_u. With a hint, the dual frame is
/// obtained from the coframe and the hint is checked to be admissible.
/// Throws std::domain_error on a non-contact form or an inadmissible hint.
template <class S>
PseudohermitianStructure<S> solve_structure(const DifferentialForm<S>& theta,
                                            const std::optional<DifferentialForm<S>>& theta1_hint = std::nullopt);

/// Residuals of the defining identities; each entry must vanish.
template <class S>
struct StructureResiduals {
  DifferentialForm<S> d_theta{2};      // d theta - i g theta^1 ^ theta^1bar
  DifferentialForm<S> d_theta1{2};     // d theta^1 - theta^1 ^ omega - A theta ^ theta^1bar
  DifferentialForm<S> metric{1};       // dg - g omega - g conj(omega)
  S curvature;                         // d omega(Z_1, Z_1bar) - R g
  S reeb_theta;                        // theta(T) - 1
  DifferentialForm<S> reeb_d_theta{1}; // i_T d theta

  bool all_zero() const {
    return d_theta.is_zero() && d_theta1.is_zero() && metric.is_zero() && curvature.is_zero() &&
           reeb_theta.is_zero() && reeb_d_theta.is_zero();
  }
};

template <class S>
StructureResiduals<S> structure_residuals(const PseudohermitianStructure<S>& st);

/// Index of a covariant derivative step.
enum class Index { One, OneBar, Zero };

/// Parses "1", "1b", "0" sequences, e.g. "11b" = {One, OneBar}. Throws
/// std::invalid_argument on anything else or more than four indices.
std::vector<Index> parse_index_pattern(const std::string& pattern);

/// A tensor component with charge (n, m): n net lower 1-indices, m net lower
/// 1bar-indices (upper indices count -1).
template <class S>
struct Component {
  S value;
  int n = 0;
  int m = 0;
};

/// One covariant derivative step sigma_{,X}.
template <class S>
Component<S> covariant_step(const PseudohermitianStructure<S>& st, const Component<S>& sigma, Index x);

/// f_{,I} for a function f and an index pattern such as "11" or "1b1".
template <class S>
S covariant_derivative(const PseudohermitianStructure<S>& st, const S& f, const std::string& pattern);

template <class S> S sublaplacian(const PseudohermitianStructure<S>& st, const S& f);
template <class S> S cr_laplacian(const PseudohermitianStructure<S>& st, const S& f);
/// (P_3 f)_1 = (g^{-1} f_{1bar,1})_{,1} + i A_11 f^1.
template <class S> S p3_operator(const PseudohermitianStructure<S>& st, const S& f);

enum class PaneitzConvention { Intro, Body };
/// Intro: Delta_b^2 f + T^2 f - 4 Im (A_11 f^1)_{,}^{1}.
/// Body: 4 g^{-1} (P_3 f)_{1,1bar}.
template <class S> S paneitz(const PseudohermitianStructure<S>& st, const S& f, PaneitzConvention c);
/// 4 Delta_b^2 f - 8 Im (A_11 f^1)_{,}^{1} - 4 Re (R f_1)_{,}^{1}.
template <class S> S p_prime(const PseudohermitianStructure<S>& st, const S& f);
/// -2 Delta_b R + R^2 - 4 |A_11|^2.
template <class S> S q_prime(const PseudohermitianStructure<S>& st);
/// R_{,1} - i A^1bar_{1,1bar}.
template <class S> S pseudo_einstein_tensor(const PseudohermitianStructure<S>& st);

/// |A|^2 = A_11 conj(A_11) g^{-2}.
template <class S> S torsion_norm_squared(const PseudohermitianStructure<S>& st);

/// Torsion as a coordinate tensor: the dz (x) dz component of A_11 theta^1 (x) theta^1.
/// Independent of the choice of admissible theta^1.
template <class S> S torsion_tensor_zz(const PseudohermitianStructure<S>& st);

/// exp of a scalar where representable: exact for LogExpr combinations of
/// log atoms, as a series for GradedSeries (zero constant term).
inline LogExpr scalar_exp(const LogExpr& y) { return LogExpr(exp_of_logs(y)); }
inline GradedSeries scalar_exp(const GradedSeries& y) { return y.exp(); }

/// Full re-solve for theta-hat = e^Y theta (no transformation formulas).
template <class S>
PseudohermitianStructure<S> conformal_change(const PseudohermitianStructure<S>& st, const S& upsilon);

/// Torsion of e^Y theta predicted from data of theta, with G = e^{Y/2}:
/// A-hat_11 = G^{-2} (A_11 + 2i (log G)_{,11} - 4i (log G)_{,1} (log G)_{,1})
/// relative to theta-hat^1 = G (theta^1 + 2i (log G)^1 theta).
template <class S>
struct TorsionTransform {
  S a11_hat;
  /// dz (x) dz component of A-hat_11 theta-hat^1 (x) theta-hat^1.
  S tensor_zz;
};

template <class S>
TorsionTransform<S> torsion_transform(const PseudohermitianStructure<S>& st, const S& upsilon);

/// Q' + P'(Y) + P(Y^2)/2 - Y P(Y) - 16 Re (grad^1 Y)(P_3 Y)_1 with the body
/// convention for P; equals e^{2Y} Q-hat' on pseudo-Einstein backgrounds.
template <class S>
S qprime_conformal_rhs(const PseudohermitianStructure<S>& st, const S& upsilon);

/// Real and imaginary parts of a scalar.
template <class S> S re(const S& x) { return (x + x.conj()) * S(GaussRational(1, 2, 0, 1)); }
template <class S> S im(const S& x) { return (x - x.conj()) * S(GaussRational(0, 1, -1, 2)); }

}  // namespace crprime
