// SPDX-License-Identifier: Apache-2.0
#include "covgon/arith.hpp"

#include <stdexcept>

namespace covgon {

Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()),
             mpq_denref(q.get_mpq_t()));
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()),
             mpq_denref(q.get_mpq_t()));
  return r;
}

Int int_below(const Rat& q) { return ceil_rat(q) - 1; }

Int binomial(const Int& top, const Int& bottom) {
  if (sgn(bottom) < 0) {
    throw std::invalid_argument("binomial: lower index must be nonnegative");
  }
  if (top < bottom) return 0;  // covers every negative top
  if (!bottom.fits_ulong_p()) {
    throw std::invalid_argument("binomial: lower index too large");
  }
  Int r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), bottom.get_ui());
  return r;
}

Int factorial(const Int& n) {
  if (sgn(n) < 0) {
    throw std::invalid_argument("factorial: argument must be nonnegative");
  }
  if (!n.fits_ulong_p()) {
    throw std::invalid_argument("factorial: argument too large");
  }
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n.get_ui());
  return r;
}

Int pow_int(const Int& base, std::uint64_t exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int product(const std::vector<Int>& xs) {
  Int r = 1;
  for (const Int& x : xs) r *= x;
  return r;
}

std::uint64_t to_u64(const Int& v) {
  if (sgn(v) < 0 || !v.fits_ulong_p()) {
    throw std::invalid_argument("integer out of range: " + to_string(v));
  }
  return v.get_ui();
}

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) {
    throw std::invalid_argument("integer out of range: " + to_string(v));
  }
  return v.get_si();
}

Int parse_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
}

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  return make_rat(num, den);
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace covgon
