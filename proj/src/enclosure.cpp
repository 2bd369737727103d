// SPDX-License-Identifier: Apache-2.0
#include "covgon/enclosure.hpp"

#include <algorithm>
#include <stdexcept>

namespace covgon {

namespace {

Rat precision_width(int precision) {
  if (precision < 1) {
    throw std::invalid_argument("precision must be >= 1");
  }
  return make_rat(1, pow_int(10, static_cast<std::uint64_t>(precision)));
}

// 1/e for a strictly positive enclosure.
Enclosure reciprocal(const Enclosure& e) {
  if (sgn(e.lower()) <= 0) {
    throw std::invalid_argument("reciprocal of enclosure touching zero");
  }
  return Enclosure(1 / e.upper(), 1 / e.lower());
}

// Enclosure of log y for y in [1, 2], width <= max_width. Alternating-free
// series in t = (y-1)/(y+1): all terms positive, so the partial sum is a
// lower endpoint and partial sum + tail bound an upper one.
Enclosure log_segment(const Rat& y, const Rat& max_width) {
  const Rat t = (y - 1) / (y + 1);
  if (sgn(t) == 0) return Enclosure::point(Rat(0));
  const Rat t2 = t * t;
  Rat sum = 0;
  Rat power = t;  // t^(2j+1)
  for (unsigned long j = 0;; ++j) {
    sum += power / Rat(2 * j + 1);
    power *= t2;
    const Rat tail = 2 * power / (Rat(2 * j + 3) * (1 - t2));
    if (tail <= max_width) {
      return Enclosure(2 * sum, 2 * sum + tail);
    }
    if (j > 1000000) {
      throw std::logic_error("log series failed to converge");
    }
  }
}

}  // namespace

Enclosure::Enclosure(Rat lower, Rat upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_ > upper_) {
    throw std::invalid_argument("enclosure with lower > upper");
  }
}

Enclosure Enclosure::point(const Rat& value) { return Enclosure(value, value); }

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  return Enclosure(a.lower() + b.lower(), a.upper() + b.upper());
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  return Enclosure(a.lower() - b.upper(), a.upper() - b.lower());
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const Rat p1 = a.lower() * b.lower();
  const Rat p2 = a.lower() * b.upper();
  const Rat p3 = a.upper() * b.lower();
  const Rat p4 = a.upper() * b.upper();
  return Enclosure(std::min(std::min(p1, p2), std::min(p3, p4)),
                   std::max(std::max(p1, p2), std::max(p3, p4)));
}

Enclosure operator*(const Rat& c, const Enclosure& e) {
  if (sgn(c) >= 0) return Enclosure(c * e.lower(), c * e.upper());
  return Enclosure(c * e.upper(), c * e.lower());
}

Enclosure operator-(const Enclosure& e) {
  return Enclosure(-e.upper(), -e.lower());
}

Enclosure div_pos(const Enclosure& a, const Enclosure& b) {
  if (sgn(b.lower()) <= 0) {
    throw std::invalid_argument("div_pos: divisor must be strictly positive");
  }
  if (sgn(a.lower()) < 0) {
    return Enclosure(a.lower() / b.lower(), a.upper() / b.lower());
  }
  return Enclosure(a.lower() / b.upper(), a.upper() / b.lower());
}

std::optional<bool> certainly_le(const Enclosure& e, const Rat& q) {
  if (e.upper() <= q) return true;
  if (e.lower() > q) return false;
  return std::nullopt;
}

std::optional<bool> certainly_lt(const Enclosure& e, const Rat& q) {
  if (e.upper() < q) return true;
  if (e.lower() >= q) return false;
  return std::nullopt;
}

std::optional<bool> certainly_gt(const Enclosure& e, const Rat& q) {
  if (e.lower() > q) return true;
  if (e.upper() <= q) return false;
  return std::nullopt;
}

Enclosure power_enclosure(const Int& base, const Int& num, const Int& den,
                          int precision) {
  if (sgn(base) < 0) {
    throw std::invalid_argument("power_enclosure: base must be nonnegative");
  }
  if (sgn(den) < 1) {
    throw std::invalid_argument("power_enclosure: denominator must be >= 1");
  }
  (void)precision_width(precision);

  Int n = num, d = den;
  Int g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g > 1) {
    n /= g;
    d /= g;
  }
  const bool negative_exp = sgn(n) < 0;
  const Int e = abs(n);
  if (sgn(e) == 0) return Enclosure::point(Rat(1));
  if (sgn(base) == 0) {
    if (negative_exp) {
      throw std::invalid_argument("power_enclosure: 0 with negative exponent");
    }
    return Enclosure::point(Rat(0));
  }
  if (base == 1) return Enclosure::point(Rat(1));

  const std::uint64_t ee = to_u64(e);
  const std::uint64_t dd = to_u64(d);
  if (dd == 1) {
    const Rat exact(pow_int(base, ee));
    return negative_exp ? reciprocal(Enclosure::point(exact))
                        : Enclosure::point(exact);
  }

  // Directed rounding: floor and ceiling of the dd-th root of
  // base^ee * 10^(2*precision*dd), then rescale by 10^(-2*precision).
  const Int scale = pow_int(10, 2 * static_cast<std::uint64_t>(precision));
  const Int shifted = pow_int(base, ee) * pow_int(scale, dd);
  Int root, rem;
  mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), shifted.get_mpz_t(), dd);
  const Rat lo = make_rat(root, scale);
  const Rat hi = sgn(rem) == 0 ? lo : make_rat(root + 1, scale);
  Enclosure result(lo, hi);
  if (negative_exp) result = reciprocal(result);
  return result;
}

Enclosure power_enclosure(const Rat& base, const Int& num, const Int& den,
                          int precision) {
  const Rat target = precision_width(precision);
  if (sgn(base) < 0) {
    throw std::invalid_argument("power_enclosure: base must be nonnegative");
  }
  Int p(mpq_numref(base.get_mpq_t()));
  Int q(mpq_denref(base.get_mpq_t()));
  if (q == 1) return power_enclosure(p, num, den, precision);
  if (sgn(num) < 0) {
    if (sgn(p) == 0) {
      throw std::invalid_argument("power_enclosure: 0 with negative exponent");
    }
    return power_enclosure(make_rat(q, p), Int(-num), den, precision);
  }
  // Widen the working precision until the quotient interval is narrow enough.
  for (int working = precision;; working *= 2) {
    const Enclosure en = power_enclosure(p, num, den, working);
    const Enclosure ed = power_enclosure(q, num, den, working);
    const Enclosure result = div_pos(en, ed);
    if (result.width() <= target) return result;
    if (working > 1 << 24) {
      throw std::logic_error("power_enclosure failed to narrow");
    }
  }
}

Enclosure log_enclosure(const Rat& x, int precision) {
  const Rat target = precision_width(precision);
  if (sgn(x) <= 0) {
    throw std::invalid_argument("log_enclosure: argument must be positive");
  }
  if (x < 1) return -log_enclosure(1 / x, precision);

  // Reduce into [1, 2] by halving; bulk shift first so huge arguments do not
  // loop bit-by-bit.
  Rat y = x;
  std::uint64_t halvings = 0;
  const std::size_t num_bits =
      mpz_sizeinbase(mpq_numref(y.get_mpq_t()), 2);
  const std::size_t den_bits =
      mpz_sizeinbase(mpq_denref(y.get_mpq_t()), 2);
  if (num_bits > den_bits + 1) {
    const std::uint64_t shift = num_bits - den_bits - 1;
    y /= Rat(pow_int(2, shift));
    halvings = shift;
  }
  while (y > 2) {
    y /= 2;
    ++halvings;
  }
  if (halvings == 0) return log_segment(y, target);

  const Enclosure log2 =
      log_segment(Rat(2), target / Rat(2 * Int(halvings)));
  const Enclosure rest = log_segment(y, target / 2);
  return Rat(Int(halvings)) * log2 + rest;
}

}  // namespace covgon
