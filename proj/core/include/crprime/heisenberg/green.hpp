#pragma once

#include <cstdint>

#include "crprime/heisenberg/flat.hpp"
#include "crprime/verify/check.hpp"

namespace crprime {

/// The Heisenberg group with its Green's function G = 1/(2 pi rho^2).
struct FlatModel {
  PseudohermitianStructure<LogExpr> st;
  LogExpr green;      // 1/(2 pi s)
  LogExpr log_green;  // -log(2 pi) - log s

  static const FlatModel& get();
};

/// 1/(2 pi s^power); power 1 is the Green's function.
LogExpr flat_green(int power = 1);
/// -log(2 pi) - power log s.
LogExpr flat_log_green(int power = 1);

/// P'(log G) on the flat model, expected 16 Re(zeta^-2).
LogExpr szego_candidate();
/// 16 Re(zeta^-2) built directly from zeta and its conjugate.
LogExpr szego_closed_form();

/// Z1-bar zeta = 0, Z1 log rho^4 = 2 zb / zeta and its second derivative.
CheckList frame_identities();
/// L G = 0 off the pole, with controls.
CheckList green_harmonicity();
/// P_3 log rho = 0, P_3 Re log zeta = 0, P_3 Im log zeta recorded.
CheckList p3_log_rho();
/// Z1 Z1 log G - 2 (Z1 log G)^2 = 0 for G = 1/(2 pi s^power), plus the
/// wrong-power control when power == 1.
CheckList log_green_identity(int power = 1);
/// theta-hat = G^2 theta-circle has vanishing torsion, curvature and Q'.
CheckList flat_torsion_of_hat();
/// Closed form, pluriharmonicity, reality and homogeneity of P'(log G).
CheckList szego_checks();
/// Flat specialization of the Q' transformation law at Y = 2 log G.
CheckList flat_closure_identity();
/// Intro versus body normalization of the Paneitz operator on a seeded
/// random polynomial.
CheckList paneitz_conventions(std::uint64_t seed);

CheckList heisenberg_suite(std::uint64_t seed, int green_power = 1);

}  // namespace crprime
