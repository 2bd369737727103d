// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "covgon/arith.hpp"

namespace covgon {

// A closed rational interval certified to contain one exact real value.
// Endpoints are exact rationals, so interval arithmetic itself is exact;
// outward rounding only happens where an irrational value is first enclosed
// (integer root extraction, logarithm series). No floating point anywhere.
class Enclosure {
 public:
  Enclosure(Rat lower, Rat upper);
  static Enclosure point(const Rat& value);

  const Rat& lower() const noexcept { return lower_; }
  const Rat& upper() const noexcept { return upper_; }
  Rat width() const { return upper_ - lower_; }
  bool contains(const Rat& value) const {
    return lower_ <= value && value <= upper_;
  }
  bool is_point() const { return lower_ == upper_; }

 private:
  Rat lower_;
  Rat upper_;
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Rat& c, const Enclosure& e);
Enclosure operator-(const Enclosure& e);

// a / b for b strictly positive (b.lower() > 0).
Enclosure div_pos(const Enclosure& a, const Enclosure& b);

// Decisive three-way comparisons: engaged optional when the interval settles
// the comparison, nullopt when the value q lies inside the interval.
std::optional<bool> certainly_le(const Enclosure& e, const Rat& q);
std::optional<bool> certainly_lt(const Enclosure& e, const Rat& q);
std::optional<bool> certainly_gt(const Enclosure& e, const Rat& q);

// base^(num/den) with width <= 10^-precision. Computed by directed integer
// root extraction on base^num * 10^(2*precision*den): the den-th root is
// rounded down for the lower endpoint and up for the upper one, so the exact
// real value always lies inside. Perfect powers collapse to a point.
// Requires base >= 0, den >= 1, precision >= 1; a negative num needs a
// positive base.
Enclosure power_enclosure(const Int& base, const Int& num, const Int& den,
                          int precision);
Enclosure power_enclosure(const Rat& base, const Int& num, const Int& den,
                          int precision);

// Natural logarithm of x > 0 with width <= 10^-precision. Argument reduction
// by powers of two into [1, 2], then the atanh series
//   log y = 2 * sum_{j>=0} t^(2j+1)/(2j+1),  t = (y-1)/(y+1) in [0, 1/3],
// truncated with the explicit rational tail bound
//   tail(J) <= t^(2J+1) / ((2J+1)(1 - t^2)).
Enclosure log_enclosure(const Rat& x, int precision);

}  // namespace covgon
