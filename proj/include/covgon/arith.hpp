// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace covgon {

// Exact arbitrary-precision integers and rationals. Rat values are always
// kept canonical (reduced, positive denominator); every helper below that
// builds one canonicalizes.
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

// Largest integer strictly below q.
Int int_below(const Rat& q);

// C(top, bottom), with the value defined as 0 whenever top < bottom —
// in particular for every negative top. bottom must be nonnegative.
Int binomial(const Int& top, const Int& bottom);

Int factorial(const Int& n);

Int pow_int(const Int& base, std::uint64_t exp);

Int product(const std::vector<Int>& xs);

// Checked narrowing; throws std::invalid_argument when out of range.
std::uint64_t to_u64(const Int& v);
std::int64_t to_i64(const Int& v);

Int parse_int(const std::string& text);
// Accepts "p" or "p/q".
Rat parse_rat(const std::string& text);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace covgon
