// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "covgon/arith.hpp"

namespace covgon {

// A complete intersection of intrinsic dimension `dim` and type `degrees`
// inside projective space of dimension dim + degrees.size(). An empty degree
// list is projective space itself. The section-count formulas are classical
// for dim >= 2; we keep them defined for dim >= 1 as well since every formula
// below stays meaningful there.
class CiSpec {
 public:
  CiSpec(std::int64_t dim, std::vector<Int> degrees);

  std::int64_t dim() const noexcept { return dim_; }
  std::int64_t codim() const noexcept {
    return static_cast<std::int64_t>(degrees_.size());
  }
  std::int64_t ambient_dim() const noexcept { return dim_ + codim(); }
  const std::vector<Int>& degrees() const noexcept { return degrees_; }

 private:
  std::int64_t dim_;
  std::vector<Int> degrees_;
};

// h^0(P^n, O(twist)) = C(twist + n, n); zero for negative twists.
Int h0_projective(std::int64_t n, const Int& twist);

// Section count via inclusion-exclusion over subsets of the defining degrees
// (alternating sum of h0_projective on the ambient space).
Int h0_ci_koszul(const CiSpec& spec, const Int& twist);

// Section count as the literal nested sum
//   sum_{j_1=0}^{a_1-1} ... sum_{j_f=0}^{a_f-1} h^0(P^dim, O(twist - sum j)).
// Agrees with h0_ci_koszul on every input; that identity is exercised
// exhaustively by the test suites.
Int h0_ci_nested(const CiSpec& spec, const Int& twist);

// Independent oracle: coefficient of t^twist in
//   prod_i (1 - t^{a_i}) / (1 - t)^{ambient+1},
// computed by truncated exact polynomial arithmetic. Requires twist >= 0.
Int h0_series_oracle(const CiSpec& spec, const Int& twist);

}  // namespace covgon
