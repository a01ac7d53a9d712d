#pragma once

#include "crprime/structure/structure.hpp"

namespace crprime {

/// theta-circle = du/2 - (i/2) zb dz + (i/2) z dzb, the Heisenberg contact form.
template <class S>
DifferentialForm<S> flat_theta() {
  return DifferentialForm<S>::one_form(S(GaussRational(0, 1, -1, 2)) * S(vars::zb()),
                                       S(GaussRational(0, 1, 1, 2)) * S(vars::z()), S(GaussRational(1, 2, 0, 1)));
}

template <class S>
PseudohermitianStructure<S> flat_structure() {
  return solve_structure(flat_theta<S>());
}

}  // namespace crprime
