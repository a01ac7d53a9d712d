#pragma once

#include <string>
#include <vector>

#include "crprime/structure/structure.hpp"
#include "crprime/verify/check.hpp"

namespace crprime {

/// Positive factors f used for exact Y = log f on the flat model.
std::vector<Poly> conformal_battery();

/// Re-solve versus transformation law for e^Y theta-circle, Y = log f:
/// Q' law, torsion dual path and structure residuals.
CheckList conformal_exact_checks(const Poly& f, const std::string& name);

/// Same comparison for a polynomial Y in graded arithmetic; the difference
/// must vanish to weighted order `order`.
CheckList conformal_graded_checks(int order);

CheckList conformal_suite(int graded_order);

}  // namespace crprime
