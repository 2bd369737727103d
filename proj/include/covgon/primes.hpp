// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "covgon/arith.hpp"

namespace covgon {

// Exact prime count pi(x). Backed by a process-wide lazily extended segmented
// sieve; safe for concurrent readers, extensions are serialized.
Int prime_pi(const Int& x);

bool is_prime(const Int& x);

// Smallest R such that pi(x) - pi(x/2) >= n for every integer x >= R.
// The search is bounded above by the certified ceiling of 4n*log(4n); above
// that bound the defining property holds unconditionally, so scanning below
// it decides R exactly.
Int ramanujan_prime(std::int64_t n);

// Certified integer degree threshold: ceiling of the upper enclosure of
// (e+1)! * 4(e-1) * log(4(e-1)). Never below the real-valued threshold.
Int degree_threshold(std::int64_t e);

// Result of the prime-degree adjustment: distinct primes q_i with
//   d_i / (2*(e+1)!) < q_i <= d_i / (e+1)!
// and adjusted degrees a_i = (e+1)! * q_i, so that d_i/2 < a_i <= d_i.
struct PrimeDegreeSelection {
  std::int64_t e = 0;
  std::vector<Int> input_degrees;
  std::vector<Int> primes;
  std::vector<Int> adjusted;
  // True when the greedy pass got stuck and an exhaustive matching was used
  // instead. Does not happen on inputs above the degree threshold.
  bool fallback_used = false;
};

// Greedy selection, working from the top degree down and taking the largest
// unused prime in each window. Requires e >= 3, degrees ascending of length
// e-1; throws hypothesis_error("threshold", ...) when d_1 is below
// degree_threshold(e) and hypothesis_error("exhausted", ...) if no assignment
// of distinct primes exists at all.
PrimeDegreeSelection select_prime_degrees(std::int64_t e,
                                          const std::vector<Int>& degrees);

// Least positive d such that (n+f-2)! * d is divisible by the product of the
// q_i; equals prod(q) / gcd(prod(q), (n+f-2)!). The q_i must be pairwise
// coprime and each larger than 2^(n+f-1) (hypothesis errors otherwise).
Int min_curve_degree(std::int64_t n, std::int64_t f,
                     const std::vector<Int>& qs);

}  // namespace covgon
