// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "covgon/arith.hpp"
#include "covgon/primes.hpp"

namespace covgon {

struct Hypothesis {
  std::string name;
  bool satisfied = false;
  std::string detail;
};

// A certified covering-gonality lower bound: the exact rational bound, the
// integer guarantee floor(bound) + 1 it implies through the point-separation
// route, and the hypothesis checks that were performed. Certificates only
// exist with every hypothesis satisfied; a failed check throws instead.
struct BoundCertificate {
  Rat bound;
  Int guarantee;
  std::vector<Hypothesis> hypotheses;
  std::vector<std::pair<std::string, Rat>> constants;
};

// Codimension-two bound 2ab/(3(n+1)^2) for a very general complete
// intersection of type (a, b) and dimension n >= 2 with 7a >= 18n and
// 7b >= 18n. Also asserts positivity of the top self-intersection
//   min(a,b) * max(a,b)^(n+1) - r * (n+1)^(n+1) > 0,  r = floor(bound).
BoundCertificate cg_bound_codim2(std::int64_t n, const Int& a, const Int& b);

// Surface bound 2 * prod(a_i) / (3^4 (3e+2) ((e+1)!)^e) for adjusted degrees
// of the special form: ascending, a_1 >= 3e, and a_i = (e+1)! * q_i with
// pairwise coprime q_i for i < e.
BoundCertificate cg_bound_surface_special(std::int64_t e,
                                          const std::vector<Int>& adjusted);

// General surface bound B(e) * prod(d_i) for e >= 3 and ascending degrees
// all at least constant_A(e); runs the prime-degree selection on the first
// e-1 degrees and records it in the certificate constants.
BoundCertificate cg_bound_surface_general(std::int64_t e,
                                          const std::vector<Int>& degrees);

// B(e) = 2 / (3^4 (3e+2) ((e+1)!)^e 2^(e-1)), exact.
Rat constant_B(std::int64_t e);

// A(e): certified integer ceiling of (e+1)! * 4(e-1) * log(4(e-1)).
Int constant_A(std::int64_t e);

}  // namespace covgon
