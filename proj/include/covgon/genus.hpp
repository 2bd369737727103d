// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "covgon/enclosure.hpp"
#include "covgon/hilbert.hpp"

namespace covgon {

// A curve on a complete intersection, described numerically by its ambient
// variety, its degree k and the multiplicities m_i at a finite set of points.
// The multiplicity cap sum(m_i) <= k * ambient_dim is a generous sanity bound
// against nonsense inputs; it never binds in any regime the bounds are used.
class CurveOnCI {
 public:
  CurveOnCI(CiSpec ambient, Int degree, std::vector<Int> mults);

  const CiSpec& ambient() const noexcept { return ambient_; }
  const Int& degree() const noexcept { return degree_; }
  const std::vector<Int>& mults() const noexcept { return mults_; }

 private:
  CiSpec ambient_;
  Int degree_;
  std::vector<Int> mults_;
};

// Lower bound for the geometric genus of an integral curve of the given
// degree on a very general complete intersection:
//   1 + (sum d_i - 2*dim - codim) * degree / 2.
// May be negative (the inequality is vacuous there); callers clamp at zero
// when using it as a genus.
Rat genus_lower_bound(const CiSpec& spec, const Int& degree);

// Upper bound on sum m_i(m_i - 1)/2 from a generic plane projection:
//   (k - 1)(k - 2)/2 - genus_lb.
// A negative result means no such curve exists.
Rat plane_gap_bound(const Int& degree, const Rat& genus_lb);

// Largest integer certified (via the lower enclosure endpoint) to be at most
//   (n-1)^(n/(n-1))/n * m^(n/(n-1)) - n*m,
// clamped below at 0 since the genus discrepancy it bounds is nonnegative.
Int delta_lower_bound(std::int64_t n, const Int& m, int precision = 12);

// Castelnuovo-style arithmetic-genus upper bound for a curve of the given
// degree cut out on a threefold of type degrees_Y by surfaces of degree at
// most a_e/3:  (sum degrees_Y + 2*a_e/3) * degree.
Rat castelnuovo_upper_bound(const std::vector<Int>& degrees_Y, const Int& a_e,
                            const Int& degree);

// Enclosure of parts * (total/parts)^(num/den): the real-relaxation minimum
// of sum m_i^(num/den) over m_i >= 0 with sum m_i = total. Exact (a point)
// when the exponent is an integer. Requires total >= parts >= 1 and
// exponent >= 1.
Enclosure min_power_sum(const Int& total, const Int& parts, const Int& exp_num,
                        const Int& exp_den, int precision = 12);

}  // namespace covgon
