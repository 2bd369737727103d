// SPDX-License-Identifier: Apache-2.0
#include "covgon/gonality.hpp"

#include <algorithm>
#include <stdexcept>

#include "covgon/errors.hpp"

namespace covgon {

namespace {

Hypothesis checked(std::string name, bool ok, std::string detail) {
  if (!ok) throw hypothesis_error(name, detail);
  return Hypothesis{std::move(name), true, std::move(detail)};
}

// Positivity of the top self-intersection on the blown-up variety, with the
// degrees ordered so the larger one carries the top power.
Hypothesis bigness_check(std::int64_t n, const Int& a, const Int& b,
                         const Int& r) {
  const Int lo = std::min(a, b);
  const Int hi = std::max(a, b);
  const Int lhs = lo * pow_int(hi, static_cast<std::uint64_t>(n + 1));
  const Int rhs = r * pow_int(Int(n + 1), static_cast<std::uint64_t>(n + 1));
  if (!(lhs > rhs)) {
    throw std::logic_error("bigness inequality failed: " + to_string(lhs) +
                           " <= " + to_string(rhs));
  }
  return Hypothesis{"bigness", true,
                    "min(a,b)*max(a,b)^(n+1) = " + to_string(lhs) + " > " +
                        to_string(rhs) + " = r*(n+1)^(n+1)"};
}

}  // namespace

BoundCertificate cg_bound_codim2(std::int64_t n, const Int& a, const Int& b) {
  if (n < 2) {
    throw std::invalid_argument("cg_bound_codim2: dimension must be >= 2");
  }
  if (a < 1 || b < 1) {
    throw std::invalid_argument("cg_bound_codim2: degrees must be >= 1");
  }
  BoundCertificate cert;
  cert.hypotheses.push_back(checked(
      "degree-a-threshold", 7 * a >= 18 * Int(n),
      "7*a = " + to_string(Int(7 * a)) + (7 * a >= 18 * Int(n) ? " >= " : " < ") +
          to_string(Int(18 * Int(n))) + " = 18*n"));
  cert.hypotheses.push_back(checked(
      "degree-b-threshold", 7 * b >= 18 * Int(n),
      "7*b = " + to_string(Int(7 * b)) + (7 * b >= 18 * Int(n) ? " >= " : " < ") +
          to_string(Int(18 * Int(n))) + " = 18*n"));

  const Rat coeff = make_rat(Int(2), 3 * Int(n + 1) * Int(n + 1));
  cert.bound = coeff * Rat(a) * Rat(b);
  const Int r = floor_rat(cert.bound);
  cert.guarantee = r + 1;
  cert.hypotheses.push_back(bigness_check(n, a, b, r));
  cert.constants.emplace_back("coefficient", coeff);
  cert.constants.emplace_back("r", Rat(r));
  return cert;
}

BoundCertificate cg_bound_surface_special(std::int64_t e,
                                          const std::vector<Int>& adjusted) {
  if (e < 2) {
    throw std::invalid_argument("cg_bound_surface_special: e must be >= 2");
  }
  if (adjusted.size() != static_cast<std::size_t>(e)) {
    throw std::invalid_argument(
        "cg_bound_surface_special: need exactly e degrees");
  }
  BoundCertificate cert;

  bool ascending = true;
  for (std::size_t i = 0; i + 1 < adjusted.size(); ++i) {
    if (adjusted[i] > adjusted[i + 1]) ascending = false;
  }
  cert.hypotheses.push_back(
      checked("ordering", ascending, "degrees must be ascending"));
  cert.hypotheses.push_back(checked(
      "minimum-degree", adjusted.front() >= 3 * Int(e),
      "a_1 = " + to_string(adjusted.front()) +
          (adjusted.front() >= 3 * Int(e) ? " >= " : " < ") +
          to_string(Int(3 * Int(e))) + " = 3e"));

  const Int fact = factorial(Int(e + 1));
  std::vector<Int> q;
  for (std::size_t i = 0; i + 1 < adjusted.size(); ++i) {
    if (!mpz_divisible_p(adjusted[i].get_mpz_t(), fact.get_mpz_t())) {
      throw hypothesis_error("special-form",
                             "a_" + std::to_string(i + 1) + " = " +
                                 to_string(adjusted[i]) +
                                 " is not a multiple of (e+1)! = " +
                                 to_string(fact));
    }
    q.push_back(adjusted[i] / fact);
  }
  cert.hypotheses.push_back(Hypothesis{
      "special-form", true, "first e-1 degrees are multiples of (e+1)!"});
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      Int g;
      mpz_gcd(g.get_mpz_t(), q[i].get_mpz_t(), q[j].get_mpz_t());
      if (g != 1) {
        throw hypothesis_error(
            "coprimality", "gcd(" + to_string(q[i]) + ", " + to_string(q[j]) +
                               ") = " + to_string(g));
      }
    }
  }
  cert.hypotheses.push_back(
      Hypothesis{"coprimality", true, "the q_i are pairwise coprime"});

  const Rat coeff = make_rat(
      Int(2), 81 * Int(3 * e + 2) * pow_int(fact, static_cast<std::uint64_t>(e)));
  cert.bound = coeff * Rat(product(adjusted));
  cert.guarantee = floor_rat(cert.bound) + 1;
  cert.constants.emplace_back("coefficient", coeff);
  cert.constants.emplace_back("r", Rat(floor_rat(cert.bound)));
  for (std::size_t i = 0; i < q.size(); ++i) {
    cert.constants.emplace_back("q" + std::to_string(i + 1), Rat(q[i]));
  }
  return cert;
}

BoundCertificate cg_bound_surface_general(std::int64_t e,
                                          const std::vector<Int>& degrees) {
  if (e < 3) {
    throw std::invalid_argument("cg_bound_surface_general: e must be >= 3");
  }
  if (degrees.size() != static_cast<std::size_t>(e)) {
    throw std::invalid_argument(
        "cg_bound_surface_general: need exactly e degrees");
  }
  for (std::size_t i = 0; i + 1 < degrees.size(); ++i) {
    if (degrees[i] > degrees[i + 1]) {
      throw std::invalid_argument(
          "cg_bound_surface_general: degrees must be ascending");
    }
  }
  BoundCertificate cert;
  const Int a_thresh = constant_A(e);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < a_thresh) {
      throw hypothesis_error("threshold",
                             "d_" + std::to_string(i + 1) + " = " +
                                 to_string(degrees[i]) +
                                 " is below the degree threshold A(e) = " +
                                 to_string(a_thresh));
    }
  }
  cert.hypotheses.push_back(Hypothesis{
      "threshold", true,
      "all degrees are at least A(e) = " + to_string(a_thresh)});

  const std::vector<Int> lower(degrees.begin(), degrees.end() - 1);
  const PrimeDegreeSelection sel = select_prime_degrees(e, lower);
  cert.hypotheses.push_back(Hypothesis{
      "prime-selection", true,
      std::string("distinct primes selected for every degree window") +
          (sel.fallback_used ? " (matching fallback used)" : "")});

  cert.bound = constant_B(e) * Rat(product(degrees));
  cert.guarantee = floor_rat(cert.bound) + 1;
  cert.constants.emplace_back("A", Rat(a_thresh));
  cert.constants.emplace_back("B", constant_B(e));
  for (std::size_t i = 0; i < sel.primes.size(); ++i) {
    cert.constants.emplace_back("q" + std::to_string(i + 1),
                                Rat(sel.primes[i]));
    cert.constants.emplace_back("a" + std::to_string(i + 1),
                                Rat(sel.adjusted[i]));
  }
  return cert;
}

Rat constant_B(std::int64_t e) {
  if (e < 2) {
    throw std::invalid_argument("constant_B: e must be >= 2");
  }
  const Int den = 81 * Int(3 * e + 2) *
                  pow_int(factorial(Int(e + 1)), static_cast<std::uint64_t>(e)) *
                  pow_int(2, static_cast<std::uint64_t>(e - 1));
  return make_rat(Int(2), den);
}

Int constant_A(std::int64_t e) { return degree_threshold(e); }

}  // namespace covgon
