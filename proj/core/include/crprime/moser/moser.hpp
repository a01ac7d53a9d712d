#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crprime/structure/structure.hpp"

namespace crprime {

/// Coefficients of the Moser normal form
/// E = -c42 z^4 zb^2 - conj(c42) z^2 zb^4 - c33 z^3 zb^3 + extra.
struct MoserData {
  Poly c42;    // polynomial in u
  Poly c33;    // real polynomial in u
  Poly extra;  // further terms in (z, zb, u); must keep E real

  static MoserData flat() { return {}; }
  /// Random rational c42, c33 of degree <= u_degree in u.
  static MoserData random(std::uint64_t seed, int u_degree);
  /// Fixed instance with u-degree 5 coefficients and weight 7, 8 terms, so
  /// that every derivative appearing in the printed expansions is nonzero.
  static MoserData generic();

  Poly e() const;
  /// E with every monomial of weight w > 6 multiplied by tau^(w-6), making
  /// the Moser block formally homogeneous of weight 6.
  Poly marked_e() const;
  /// Throws std::invalid_argument if E is not real or c42, c33 involve
  /// anything but u.
  void validate() const;
};

/// r = v - z zb + E(z, zb, u) as a polynomial in (z, zb, u, v).
Poly defining_function(const MoserData& md);

/// i d r restricted to v = |z|^2 - E, with tau-marked E and the given
/// truncation precision.
DifferentialForm<GradedSeries> moser_contact_form(const MoserData& md, int precision);

struct MoserStructure {
  PseudohermitianStructure<GradedSeries> st;
  GradedSeries e;       // marked E with precision
  GradedSeries lambda;  // Z_1 = d_z + lambda d_u
  GradedSeries a1;      // (-E_uz - lambda E_uu) / (i + E_u)
  int order = 0;
  int precision = 0;
};

/// Working precision used for a requested truncation order.
int moser_precision(int order);

/// Runs the structure solver on Moser's contact form. Throws
/// std::invalid_argument if order < 6.
MoserStructure moser_structure(const MoserData& md, int order);

/// Named graded quantities: lambda, a1, g, g_inv, A, R, pe_tensor,
/// Z1bar_a1bar (= g^{-1} Z_1 conj(a1)), Z1bar_g (= g^{-1} Z_1 g), q_prime.
GradedSeries moser_quantity(const MoserStructure& ms, const std::string& name);

/// One term coef * z^a zb^b u^c * (d_z^i d_zb^j d_u^k E).
struct GoldenTerm {
  GaussRational coef;
  std::array<int, 3> monomial{};
  std::optional<std::array<int, 3>> e_derivative;
};

/// Replacement of one printed coefficient; `corrected` of zero drops the term.
struct GoldenErratum {
  std::array<int, 3> monomial{};
  std::optional<std::array<int, 3>> e_derivative;
  GaussRational printed;
  GaussRational corrected;
  std::string note;
};

struct GoldenExpansion {
  std::string id;        // e.g. "torsion"
  std::string quantity;  // moser_quantity name
  int remainder_order = 0;
  std::vector<GoldenTerm> terms;
  std::vector<GoldenErratum> errata;
};

/// The expansion with its errata applied. Throws std::invalid_argument if an
/// erratum does not match a printed term (or, for a zero printed value, if
/// the term already exists).
GoldenExpansion with_errata(const GoldenExpansion& g);

struct GoldenFile {
  int version = 0;
  std::vector<GoldenExpansion> expansions;
};

/// Parses the golden expansion file. Throws std::invalid_argument on
/// malformed input.
GoldenFile parse_golden(const std::string& json_text);
std::string golden_to_json(const GoldenFile& file);

/// Evaluates a golden expansion on a concrete (marked) E, truncated at its
/// remainder order.
GradedSeries evaluate_golden(const GoldenExpansion& g, const Poly& marked_e);

struct ExpansionCheck {
  std::string id;
  bool pass = false;
  int engine_error_order = 0;
  int remainder_order = 0;
  GradedSeries difference;  // engine - golden, truncated at the remainder order
  std::string detail;
};

ExpansionCheck verify_expansion(const MoserStructure& ms, const GoldenExpansion& g);

/// Order-pattern claim: quantity has weighted vanishing order >= printed.
struct OrderClaim {
  std::string id;       // e.g. "coframe:theta.dz"
  int printed = 0;
  int measured = 0;     // vanishing order (capped by the tracked error order)
  int tracked = 0;      // error order of the computed series
  bool pass() const { return measured >= printed; }
};

/// Order patterns of the contact form, coframe, frame, connection, torsion,
/// curvature and metric, in the coordinate basis {theta-circle, dz, dzb}.
std::vector<OrderClaim> order_pattern_structure(const MoserStructure& ms);
/// Coefficients of Delta_b in the basis of flat operators.
std::vector<OrderClaim> order_pattern_sublaplacian(const MoserStructure& ms);

/// Pseudo-Einstein tensor restricted to z = zb = 0.
GradedSeries chain_restriction(const MoserStructure& ms);

/// Coefficient of z^1 zb^0 in E_{zzz zb zb}, a polynomial in u.
Poly cartan_coefficient(const MoserData& md);

/// det [[psi, psi_zb, psi_wb], [psi_z, psi_zzb, psi_zwb], [psi_w, psi_wzb, psi_wwb]]
/// for psi a polynomial in (z, zb, u, v), with d_w = (d_u - i d_v)/2.
Poly fefferman_j(const Poly& psi);

/// J[4^{1/3} r] = 4 J[r] on the hypersurface v = |z|^2 - E (tau-marked E),
/// as an exact series.
GradedSeries fefferman_on_surface(const MoserData& md);

}  // namespace crprime
