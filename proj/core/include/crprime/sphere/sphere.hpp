#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "crprime/sphere/integrand.hpp"
#include "crprime/structure/structure.hpp"
#include "crprime/verify/check.hpp"

namespace crprime {

/// Round sphere minus a point in the Heisenberg chart:
/// theta = 4 / ((1 + |z|^2)^2 + u^2) * theta-circle.
struct SphereChart {
  LogExpr factor;
  PseudohermitianStructure<LogExpr> st;
  LogExpr density;  // theta ^ d theta = density dx dy du
  LogExpr q_prime;
};

const SphereChart& sphere_structure_in_chart();

/// Product Gauss rule in Heisenberg polar coordinates
/// |z|^2 = rho^2 cos(a), u = rho^2 sin(a), arg z = b, dx dy du = rho^3 drho da db.
struct QuadratureConfig {
  int radial = 48;
  int polar = 32;
  int azimuthal = 8;
  /// rho = scale * t / (1 - t) on the unbounded chart.
  double radial_scale = 1.0;
  /// Chart rotation z -> e^{i rotation} z applied before evaluation.
  double rotation = 0.0;

  /// Throws std::invalid_argument unless node counts >= 4 and scale > 0.
  void validate() const;
  QuadratureConfig doubled() const;
};

struct QuadratureResult {
  double value = 0;
  double error = 0;  // |I(2N) - I(N)|; value is I(2N)
};

using ChartFunction = std::function<double(double x, double y, double u)>;

/// Single product-rule sum over the whole chart (rho_max <= 0) or over rho < rho_max.
double integrate_chart(const ChartFunction& f, const QuadratureConfig& cfg, double rho_max = 0);
/// Base and doubled rule, with the doubled value and the difference as error.
QuadratureResult integrate_with_error(const ChartFunction& f, const QuadratureConfig& cfg, double rho_max = 0);

/// Integral of Q' theta ^ d theta over the chart.
QuadratureResult total_q_prime(const QuadratureConfig& cfg = {});

/// Radial-type test function f(x, u) of x = |z|^2 with its derivatives.
struct BumpProfile {
  std::string name;
  double support_rho;  // f vanishes for rho >= support_rho
  std::function<void(double x, double u, double out[4])> eval;  // f, f_x, f_xx, f_uu
};

std::vector<BumpProfile> bump_profiles();
/// Same shape as the first profile, centred at (z, u) = (0, u0).
BumpProfile shifted_bump(double u0);

/// L f = -4 Delta_b f = -8 (f_x + x (f_xx + f_uu)) for f = f(|z|^2, u).
double flat_cr_laplacian(const BumpProfile& b, double x, double u);

struct DeltaResult {
  double integral = 0;  // int G (L f) dx dy du
  double error = 0;
  double constant = 0;  // integral / f(0)
};

/// Throws std::invalid_argument if the support reaches the truncation radius.
DeltaResult delta_normalization(const BumpProfile& b, const QuadratureConfig& cfg, double truncation_rho);

struct SphereSuiteConfig {
  QuadratureConfig quadrature;
  /// Bump integrals depend on (|z|^2, u) only but vary quickly near the
  /// support boundary, so they get their own rule.
  QuadratureConfig delta{192, 192, 4, 1.0, 0.0};
  double tolerance = 1e-6;
  std::uint64_t seed = 1;
};

CheckList sphere_suite(const SphereSuiteConfig& cfg);

}  // namespace crprime
