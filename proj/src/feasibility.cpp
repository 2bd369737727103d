// SPDX-License-Identifier: Apache-2.0
#include "covgon/feasibility.hpp"

#include <stdexcept>

#include "covgon/enclosure.hpp"
#include "covgon/errors.hpp"
#include "covgon/gonality.hpp"

namespace covgon {

namespace {

constexpr std::int64_t kMaxInductionSteps = 200000;
constexpr std::int64_t kStateBudget = 1000000;

std::string decision_str(bool ok) { return ok ? "satisfied" : "violated"; }

// sum m_i (m_i - 1) at the balanced partition of S into `parts` parts.
// Balancing minimizes the sum over integer vectors with the given total, so
// it is the witness candidate for any (k, S) cell.
Int balanced_pair_count(const Int& S, std::int64_t parts) {
  const Int p(parts);
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), S.get_mpz_t(), p.get_mpz_t());
  return r * (q + 1) * q + (p - r) * q * (q - 1);
}

std::vector<Int> balanced_vector(const Int& S, std::int64_t parts) {
  const Int p(parts);
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), S.get_mpz_t(), p.get_mpz_t());
  std::vector<Int> m;
  m.reserve(static_cast<std::size_t>(parts));
  const std::int64_t big = to_i64(r);
  for (std::int64_t i = 0; i < big; ++i) m.push_back(q + 1);
  for (std::int64_t i = big; i < parts; ++i) m.push_back(q);
  return m;
}

void require_all_satisfied(const std::vector<ConstraintCheck>& checks) {
  for (const auto& c : checks) {
    if (c.status != Decision::Satisfied) {
      throw std::logic_error("witness failed re-validation on constraint '" +
                             c.name + "': " + c.detail);
    }
  }
}

// Enclosure of 2^{3/2}/3 * sum m_i^{3/2}.
Enclosure three_halves_side(const std::vector<Int>& mults, int precision) {
  Enclosure sum = Enclosure::point(Rat(0));
  for (const Int& m : mults) {
    if (sgn(m) == 0) continue;
    sum = sum + power_enclosure(m, Int(3), Int(2), precision);
  }
  const Enclosure root8 = power_enclosure(Int(2), Int(3), Int(2), precision);
  return make_rat(1, Int(3)) * (root8 * sum);
}

// Decides lhs <= rhs for the three-halves constraint, escalating the working
// precision up to four times the request before giving up.
Decision decide_three_halves(const std::vector<Int>& mults, const Rat& rhs,
                             int precision, std::string* detail) {
  for (int working = precision; working <= 4 * precision; working *= 2) {
    const Enclosure lhs = three_halves_side(mults, working);
    const auto verdict = certainly_le(lhs, rhs);
    if (verdict.has_value()) {
      if (detail != nullptr) {
        *detail = "2^(3/2)/3 * sum m^(3/2) in [" + to_string(lhs.lower()) +
                  ", " + to_string(lhs.upper()) + "] vs " + to_string(rhs);
      }
      return *verdict ? Decision::Satisfied : Decision::Violated;
    }
  }
  if (detail != nullptr) {
    *detail = "comparison undecided at precision cap";
  }
  return Decision::Undecided;
}

}  // namespace

Codim2System make_codim2_system(std::int64_t n, const Int& a, const Int& b,
                                std::int64_t s) {
  if (n < 2) throw std::invalid_argument("codim2 system: n must be >= 2");
  if (s < 2) throw std::invalid_argument("codim2 system: s must be >= 2");
  if (a < 1 || b < 1) {
    throw std::invalid_argument("codim2 system: degrees must be >= 1");
  }
  return Codim2System{n, a, b, s};
}

SurfaceSystem make_surface_system(std::int64_t e,
                                  const std::vector<Int>& degrees_Y,
                                  const Int& a_e, std::int64_t s) {
  if (e < 2) throw std::invalid_argument("surface system: e must be >= 2");
  if (s < 2) throw std::invalid_argument("surface system: s must be >= 2");
  if (degrees_Y.size() != static_cast<std::size_t>(e - 1)) {
    throw std::invalid_argument(
        "surface system: need exactly e-1 threefold degrees");
  }
  for (std::size_t i = 0; i < degrees_Y.size(); ++i) {
    if (degrees_Y[i] < 1) {
      throw std::invalid_argument("surface system: degrees must be >= 1");
    }
    const Int& next = i + 1 < degrees_Y.size() ? degrees_Y[i + 1] : a_e;
    if (degrees_Y[i] > next) {
      throw std::invalid_argument("surface system: degrees must be ascending");
    }
  }
  SurfaceSystem sys;
  sys.e = e;
  sys.degrees_Y = degrees_Y;
  sys.a_e = a_e;
  sys.s = s;
  sys.alpha = product(degrees_Y);

  const Int fact = factorial(Int(e + 1));
  sys.special_form = true;
  for (const Int& d : degrees_Y) {
    if (!mpz_divisible_p(d.get_mpz_t(), fact.get_mpz_t())) {
      sys.special_form = false;
      break;
    }
    sys.q.push_back(d / fact);
  }
  if (sys.special_form) {
    for (std::size_t i = 0; i < sys.q.size() && sys.special_form; ++i) {
      for (std::size_t j = i + 1; j < sys.q.size(); ++j) {
        Int g;
        mpz_gcd(g.get_mpz_t(), sys.q[i].get_mpz_t(), sys.q[j].get_mpz_t());
        if (g != 1) {
          sys.special_form = false;
          break;
        }
      }
    }
  }
  if (!sys.special_form) sys.q.clear();
  return sys;
}

std::vector<ConstraintCheck> codim2_constraints(const Codim2System& sys,
                                                const Int& k,
                                                const std::vector<Int>& mults) {
  if (mults.size() != static_cast<std::size_t>(sys.s + 1)) {
    throw std::invalid_argument("codim2_constraints: need s+1 multiplicities");
  }
  if (k < 1) {
    throw std::invalid_argument("codim2_constraints: k must be >= 1");
  }
  Int S = 0;
  Int pair_count = 0;  // sum m_i (m_i - 1)
  bool all_positive = true;
  for (const Int& m : mults) {
    S += m;
    pair_count += m * (m - 1);
    if (m < 1) all_positive = false;
  }

  std::vector<ConstraintCheck> checks;
  const Int np1(sys.n + 1);

  const bool c1 = (np1 * S) > sys.b * k;  // strict
  checks.push_back({"sum-mults-lower", c1 ? Decision::Satisfied : Decision::Violated,
                    "(n+1)*sum(m) = " + to_string(Int(np1 * S)) +
                        (c1 ? " > " : " <= ") + to_string(Int(sys.b * k)) +
                        " = b*k"});

  const bool c2 = Int(sys.s) * np1 * S <= Int(sys.s + 1) * sys.b * k;
  checks.push_back({"sum-mults-upper", c2 ? Decision::Satisfied : Decision::Violated,
                    "s*(n+1)*sum(m) = " + to_string(Int(Int(sys.s) * np1 * S)) +
                        (c2 ? " <= " : " > ") +
                        to_string(Int(Int(sys.s + 1) * sys.b * k)) +
                        " = (s+1)*b*k"});

  const Int gap_rhs = k * k + (2 * Int(sys.n) - sys.a) * k;
  const bool c3 = pair_count <= gap_rhs;
  checks.push_back({"genus-gap", c3 ? Decision::Satisfied : Decision::Violated,
                    "sum m(m-1) = " + to_string(pair_count) +
                        (c3 ? " <= " : " > ") + to_string(gap_rhs) +
                        " = k^2 + (2n-a)k"});

  checks.push_back({"mults-positive",
                    all_positive ? Decision::Satisfied : Decision::Violated,
                    all_positive ? "every m_i >= 1" : "some m_i < 1"});
  return checks;
}

namespace {

// Exhaustive scan over the given degree range: for each k the admissible
// totals S form an integer interval from (i) and (ii), and the balanced
// candidate settles existence for each (k, S).
std::optional<CurveClass> scan_codim2(const Codim2System& sys,
                                      const Int& k_from, const Int& k_to) {
  const Int np1(sys.n + 1);
  Int k = k_from < 1 ? Int(1) : k_from;
  for (; k <= k_to; ++k) {
    const Int gap_rhs = k * k + (2 * Int(sys.n) - sys.a) * k;
    if (sgn(gap_rhs) < 0) continue;  // sum m(m-1) >= 0 can never fit
    Int s_min = floor_rat(make_rat(sys.b * k, np1)) + 1;
    if (s_min < sys.s + 1) s_min = sys.s + 1;
    const Int s_max = floor_rat(make_rat(Int(sys.s + 1) * sys.b * k,
                                         Int(sys.s) * np1));
    for (Int S = s_min; S <= s_max; ++S) {
      if (balanced_pair_count(S, sys.s + 1) <= gap_rhs) {
        return CurveClass{k, balanced_vector(S, sys.s + 1)};
      }
    }
  }
  return std::nullopt;
}

FeasibilityVerdict codim2_verdict_with(const Codim2System& sys,
                                       FeasibilityVerdict v) {
  if (v.witness.has_value()) {
    require_all_satisfied(
        codim2_constraints(sys, v.witness->degree, v.witness->mults));
    v.outcome = Outcome::Witness;
  }
  return v;
}

}  // namespace

FeasibilityVerdict codim2_decide_analytic(const Codim2System& sys,
                                          std::optional<Int> fallback_k_max) {
  FeasibilityVerdict v;

  // Lower endpoint: the pair count is nonnegative, so (iii) forces
  // k^2 + (2n-a)k >= 0, i.e. k >= a - 2n; k >= 1 always.
  Int k_lo = sys.a - 2 * Int(sys.n);
  if (k_lo < 1) {
    k_lo = 1;
    v.interval.lower_source = "degree-positivity";
  } else {
    v.interval.lower_source = "genus-gap";
  }
  v.interval.lower = k_lo;

  // Upper endpoint: combining the quadratic mean of (i) with (ii) and (iii)
  // and dividing by k gives c*k < rho with
  //   c = b^2 / ((n+1)^2 (s+1)) - 1,
  //   rho = 2n - a + (s+1) b / (s (n+1)).
  const Int np1(sys.n + 1);
  const Rat c =
      make_rat(sys.b * sys.b, np1 * np1 * Int(sys.s + 1)) - 1;
  const Rat rho = Rat(2 * Int(sys.n) - sys.a) +
                  make_rat(Int(sys.s + 1) * sys.b, Int(sys.s) * np1);

  if (sgn(c) <= 0) {
    // No finite upper endpoint from the chain; never divide by a nonpositive
    // coefficient. Fall back to the bounded search.
    const Int horizon = fallback_k_max.value_or(Int(5 * sys.a));
    FeasibilityVerdict fb = codim2_decide_bruteforce(sys, horizon);
    fb.interval.lower = v.interval.lower;
    fb.interval.lower_source = v.interval.lower_source;
    fb.note = "chain coefficient nonpositive; bounded search up to k = " +
              to_string(horizon);
    return fb;
  }

  v.interval.upper = int_below(rho / c);
  v.interval.upper_source = "qm-genus-chain";

  if (v.interval.is_empty()) {
    v.outcome = Outcome::Infeasible;
    v.note = "derived degree interval is empty";
    return v;
  }
  v.witness = scan_codim2(sys, v.interval.lower, *v.interval.upper);
  if (v.witness.has_value()) return codim2_verdict_with(sys, std::move(v));
  v.outcome = Outcome::Infeasible;
  v.note = "derived degree interval scanned exhaustively";
  return v;
}

FeasibilityVerdict codim2_decide_bruteforce(const Codim2System& sys,
                                            const Int& k_max) {
  if (k_max < 1) {
    throw std::invalid_argument("codim2_decide_bruteforce: k_max must be >= 1");
  }
  FeasibilityVerdict v;
  v.interval.lower = 1;
  v.interval.lower_source = "search";
  v.interval.upper = k_max;
  v.interval.upper_source = "search-horizon";
  v.witness = scan_codim2(sys, Int(1), k_max);
  if (v.witness.has_value()) return codim2_verdict_with(sys, std::move(v));
  v.outcome = Outcome::InfeasibleWithinHorizon;
  v.note = "no witness with k <= " + to_string(k_max);
  return v;
}

std::vector<ConstraintCheck> surface_constraints(const SurfaceSystem& sys,
                                                 const Int& k,
                                                 const std::vector<Int>& mults,
                                                 int precision) {
  if (mults.size() != static_cast<std::size_t>(sys.s + 1)) {
    throw std::invalid_argument("surface_constraints: need s+1 multiplicities");
  }
  if (k < 1) {
    throw std::invalid_argument("surface_constraints: k must be >= 1");
  }
  if (precision < 1) {
    throw std::invalid_argument("surface_constraints: precision must be >= 1");
  }
  Int S = 0;
  bool all_positive = true;
  for (const Int& m : mults) {
    S += m;
    if (m < 1) all_positive = false;
  }

  std::vector<ConstraintCheck> checks;

  const bool c1 = 3 * S > sys.a_e * k;  // strict
  checks.push_back({"sum-mults-lower", c1 ? Decision::Satisfied : Decision::Violated,
                    "3*sum(m) = " + to_string(Int(3 * S)) +
                        (c1 ? " > " : " <= ") + to_string(Int(sys.a_e * k)) +
                        " = a_e*k"});

  const bool c2 = 3 * Int(sys.s) * S <= Int(sys.s + 1) * sys.a_e * k;
  checks.push_back({"sum-mults-upper", c2 ? Decision::Satisfied : Decision::Violated,
                    "3*s*sum(m) = " + to_string(Int(3 * Int(sys.s) * S)) +
                        (c2 ? " <= " : " > ") +
                        to_string(Int(Int(sys.s + 1) * sys.a_e * k)) +
                        " = (s+1)*a_e*k"});

  Int deg_sum = 0;
  for (const Int& d : sys.degrees_Y) deg_sum += d;
  const Rat rhs = (Rat(deg_sum) + make_rat(5 * sys.a_e, Int(3))) * Rat(k);
  std::string detail;
  const Decision d3 = decide_three_halves(mults, rhs, precision, &detail);
  checks.push_back({"delta-castelnuovo", d3, detail});

  if (sys.special_form) {
    const Int prod_q = product(sys.q);
    const Int efact = factorial(Int(sys.e));
    const bool c4 = efact * k >= prod_q;
    checks.push_back({"degree-divisibility",
                      c4 ? Decision::Satisfied : Decision::Violated,
                      "e!*k = " + to_string(Int(efact * k)) +
                          (c4 ? " >= " : " < ") + to_string(prod_q) +
                          " = q_1*...*q_(e-1)"});
  }

  checks.push_back({"mults-positive",
                    all_positive ? Decision::Satisfied : Decision::Violated,
                    all_positive ? "every m_i >= 1" : "some m_i < 1"});
  return checks;
}

FeasibilityVerdict surface_decide(const SurfaceSystem& sys, const Int& k_max,
                                  int precision) {
  if (k_max < 1) {
    throw std::invalid_argument("surface_decide: k_max must be >= 1");
  }
  if (precision < 1) {
    throw std::invalid_argument("surface_decide: precision must be >= 1");
  }
  FeasibilityVerdict v;
  v.partial_system = !sys.special_form;

  // Lower endpoint from the divisibility leg when the degrees carry the
  // special form; otherwise only degree positivity.
  v.interval.lower = 1;
  v.interval.lower_source = "degree-positivity";
  if (sys.special_form) {
    const Int lower = ceil_rat(make_rat(product(sys.q), factorial(Int(sys.e))));
    if (lower > v.interval.lower) {
      v.interval.lower = lower;
      v.interval.lower_source = "degree-divisibility";
    }
  }

  // Upper endpoint: squaring the power-mean consequence of (i) against (iii)
  // leaves rationals on both sides and solves to
  //   k < 3^5 (s+1) (sum degrees_Y + 5 a_e/3)^2 / (8 a_e^3).
  Int deg_sum = 0;
  for (const Int& d : sys.degrees_Y) deg_sum += d;
  const Rat side = Rat(deg_sum) + make_rat(5 * sys.a_e, Int(3));
  const Rat upper_raw = Rat(243 * Int(sys.s + 1)) * side * side /
                        Rat(8 * sys.a_e * sys.a_e * sys.a_e);
  v.interval.upper = int_below(upper_raw);
  v.interval.upper_source = "power-mean-chain";

  if (v.interval.is_empty()) {
    v.outcome = Outcome::Infeasible;
    v.note = "derived degree interval is empty";
    return v;
  }

  const Int scan_hi =
      *v.interval.upper < k_max ? *v.interval.upper : k_max;
  const bool truncated = *v.interval.upper > k_max;
  std::int64_t states = 0;
  bool budget_hit = false;

  for (Int k = v.interval.lower; k <= scan_hi && !budget_hit; ++k) {
    Int s_min = floor_rat(make_rat(sys.a_e * k, Int(3))) + 1;
    if (s_min < sys.s + 1) s_min = sys.s + 1;
    const Int s_max =
        floor_rat(make_rat(Int(sys.s + 1) * sys.a_e * k, 3 * Int(sys.s)));
    const Rat rhs = (Rat(deg_sum) + make_rat(5 * sys.a_e, Int(3))) * Rat(k);
    for (Int S = s_min; S <= s_max; ++S) {
      if (++states > kStateBudget) {
        budget_hit = true;
        break;
      }
      const std::vector<Int> mults = balanced_vector(S, sys.s + 1);
      const Decision d = decide_three_halves(mults, rhs, precision, nullptr);
      if (d == Decision::Satisfied) {
        v.witness = CurveClass{k, mults};
        require_all_satisfied(surface_constraints(sys, k, mults, precision));
        v.outcome = Outcome::Witness;
        return v;
      }
      if (d == Decision::Undecided) ++v.undecided_cells;
    }
  }

  if (!truncated && !budget_hit && v.undecided_cells == 0) {
    v.outcome = Outcome::Infeasible;
    v.note = "derived degree interval scanned exhaustively";
  } else {
    v.outcome = Outcome::InfeasibleWithinHorizon;
    if (budget_hit) {
      v.note = "state budget exhausted before covering the interval";
    } else if (truncated) {
      v.note = "no witness with k <= " + to_string(k_max) +
               " (interval extends beyond horizon)";
    } else {
      v.note = "interval scanned but " + std::to_string(v.undecided_cells) +
               " cell(s) undecided at the precision cap";
    }
  }
  return v;
}

InductionReport verify_codim2_induction(std::int64_t n, const Int& a,
                                        const Int& b,
                                        std::optional<Int> k_max) {
  const BoundCertificate cert = cg_bound_codim2(n, a, b);
  InductionReport report;
  report.theorem = "codim2";
  report.r = floor_rat(cert.bound);
  if (report.r - 2 > kMaxInductionSteps) {
    throw std::invalid_argument(
        "verify_codim2_induction: too many induction steps for desk scale");
  }
  for (Int s = 2; s < report.r; ++s) {
    const std::int64_t step = to_i64(s);
    const Codim2System sys = make_codim2_system(n, a, b, step);
    FeasibilityVerdict verdict = codim2_decide_analytic(sys, k_max);
    if (verdict.outcome == Outcome::Witness) report.witness_found = true;
    if (verdict.outcome != Outcome::Infeasible) {
      report.all_certified_infeasible = false;
    }
    report.steps.push_back({step, std::move(verdict)});
  }
  return report;
}

InductionReport verify_surface_induction(std::int64_t e,
                                         const std::vector<Int>& adjusted,
                                         std::optional<Int> k_max,
                                         int precision) {
  const BoundCertificate cert = cg_bound_surface_special(e, adjusted);
  InductionReport report;
  report.theorem = "surface";
  report.r = floor_rat(cert.bound);
  if (report.r - 2 > kMaxInductionSteps) {
    throw std::invalid_argument(
        "verify_surface_induction: too many induction steps for desk scale");
  }
  const std::vector<Int> degrees_Y(adjusted.begin(), adjusted.end() - 1);
  const Int& a_e = adjusted.back();
  for (Int s = 2; s < report.r; ++s) {
    const std::int64_t step = to_i64(s);
    const SurfaceSystem sys = make_surface_system(e, degrees_Y, a_e, step);
    Int horizon;
    if (k_max.has_value()) {
      horizon = *k_max;
    } else {
      horizon = sys.special_form ? 5 * product(sys.q) : Int(kStateBudget);
      if (horizon < 1) horizon = 1;
    }
    FeasibilityVerdict verdict = surface_decide(sys, horizon, precision);
    if (verdict.outcome == Outcome::Witness) report.witness_found = true;
    if (verdict.outcome != Outcome::Infeasible) {
      report.all_certified_infeasible = false;
    }
    report.steps.push_back({step, std::move(verdict)});
  }
  return report;
}

}  // namespace covgon
