// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "covgon/arith.hpp"

namespace covgon {

// Section-count check used by the surface argument: does a hypersurface of
// degree floor(a_e/3) through s+1 general points exist? Compares the exact
// section count against the requirement and against the closed-form estimate
// that the argument actually uses. The estimate is a genuine lower bound for
// the exact count whenever the degrees meet the special-form hypotheses.
struct DimCountReport {
  Int exact_h0;
  Rat estimate_lower_bound;
  Int required;  // s + 1
  bool exact_pass = false;
  bool estimate_pass = false;
};

// First surface V_1 inside the threefold of type degrees_Y: exact count is
// h^0 of the threefold at twist floor(a_e/3); the estimate is
// alpha * a_e^3 / (6 * (3e)^(e+2)).
DimCountReport check_first_surface(std::int64_t e,
                                   const std::vector<Int>& degrees_Y,
                                   const Int& a_e, std::int64_t s);

// Second surface inside V_1 of degree b1 <= floor(a_e/3): exact count is h^0
// of the surface of type degrees_Y + (b1) at the same twist; the estimate is
// alpha * a_e^2 / (2 * (3e)^(e+1)).
DimCountReport check_second_surface(std::int64_t e,
                                    const std::vector<Int>& degrees_Y,
                                    const Int& b1, const Int& a_e,
                                    std::int64_t s);

// Twist beyond which the first cohomology of the relevant ideal sheaf
// vanishes: sum(degrees_Y) - e - 2 + b1 + b2, with e = degrees_Y.size() + 1.
// Pure formula; feeds the derivation notes of the arithmetic-genus bound.
Int castelnuovo_vanishing_threshold(const std::vector<Int>& degrees_Y,
                                    const Int& b1, const Int& b2);

}  // namespace covgon
