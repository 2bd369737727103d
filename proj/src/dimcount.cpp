// SPDX-License-Identifier: Apache-2.0
#include "covgon/dimcount.hpp"

#include <stdexcept>

#include "covgon/hilbert.hpp"

namespace covgon {

namespace {

void validate_common(std::int64_t e, const std::vector<Int>& degrees_Y,
                     const Int& a_e) {
  if (e < 2) {
    throw std::invalid_argument("dimension count: e must be >= 2");
  }
  if (degrees_Y.size() != static_cast<std::size_t>(e - 1)) {
    throw std::invalid_argument(
        "dimension count: need exactly e-1 threefold degrees");
  }
  for (std::size_t i = 0; i < degrees_Y.size(); ++i) {
    if (degrees_Y[i] < 1) {
      throw std::invalid_argument("dimension count: degrees must be >= 1");
    }
    const Int& next = i + 1 < degrees_Y.size() ? degrees_Y[i + 1] : a_e;
    if (degrees_Y[i] > next) {
      throw std::invalid_argument("dimension count: degrees must be ascending");
    }
  }
}

Int floor_third(const Int& a_e) {
  Int l;
  mpz_fdiv_q_ui(l.get_mpz_t(), a_e.get_mpz_t(), 3);
  return l;
}

}  // namespace

DimCountReport check_first_surface(std::int64_t e,
                                   const std::vector<Int>& degrees_Y,
                                   const Int& a_e, std::int64_t s) {
  validate_common(e, degrees_Y, a_e);
  if (s < 0) {
    throw std::invalid_argument("check_first_surface: s must be >= 0");
  }
  const Int twist = floor_third(a_e);
  DimCountReport report;
  report.exact_h0 = h0_ci_nested(CiSpec(3, degrees_Y), twist);
  const Int alpha = product(degrees_Y);
  report.estimate_lower_bound =
      make_rat(alpha * pow_int(a_e, 3),
               6 * pow_int(Int(3 * e), static_cast<std::uint64_t>(e + 2)));
  report.required = Int(s) + 1;
  report.exact_pass = report.exact_h0 > report.required;
  report.estimate_pass = report.estimate_lower_bound > Rat(report.required);
  return report;
}

DimCountReport check_second_surface(std::int64_t e,
                                    const std::vector<Int>& degrees_Y,
                                    const Int& b1, const Int& a_e,
                                    std::int64_t s) {
  validate_common(e, degrees_Y, a_e);
  if (s < 0) {
    throw std::invalid_argument("check_second_surface: s must be >= 0");
  }
  const Int twist = floor_third(a_e);
  if (b1 < 1 || b1 > twist) {
    throw std::invalid_argument(
        "check_second_surface: b1 must lie in [1, floor(a_e/3)]");
  }
  std::vector<Int> degrees = degrees_Y;
  degrees.push_back(b1);
  DimCountReport report;
  report.exact_h0 = h0_ci_nested(CiSpec(2, degrees), twist);
  const Int alpha = product(degrees_Y);
  report.estimate_lower_bound =
      make_rat(alpha * pow_int(a_e, 2),
               2 * pow_int(Int(3 * e), static_cast<std::uint64_t>(e + 1)));
  report.required = Int(s) + 1;
  report.exact_pass = report.exact_h0 > report.required;
  report.estimate_pass = report.estimate_lower_bound > Rat(report.required);
  return report;
}

Int castelnuovo_vanishing_threshold(const std::vector<Int>& degrees_Y,
                                    const Int& b1, const Int& b2) {
  const std::int64_t e = static_cast<std::int64_t>(degrees_Y.size()) + 1;
  Int total = 0;
  for (const Int& d : degrees_Y) total += d;
  return total - e - 2 + b1 + b2;
}

}  // namespace covgon
