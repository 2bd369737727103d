// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covgon/arith.hpp"

namespace covgon {

// Induction-step constraint system for the codimension-two nefness argument:
// dimension n >= 2, type (a, b), induction from r = s to r = s + 1 points.
// A hypothetical obstructing curve class has degree k >= 1 and multiplicities
// m_1, ..., m_{s+1} and must satisfy, with S = sum m_i:
//   (i)   (n+1) S  >  b k                  (the class meets the bundle negatively)
//   (ii)  s (n+1) S <= (s+1) b k           (nef averaging over s-subsets)
//   (iii) sum m_i (m_i - 1) <= k^2 + (2n - a) k   (plane gap vs genus bound)
//   (iv)  m_i >= 1
struct Codim2System {
  std::int64_t n = 2;
  Int a;
  Int b;
  std::int64_t s = 2;
};

Codim2System make_codim2_system(std::int64_t n, const Int& a, const Int& b,
                                std::int64_t s);

// Induction-step system for complete intersection surfaces: the ambient
// threefold has type degrees_Y = (a_1, ..., a_{e-1}) of product alpha, the
// surface is cut by degree a_e, and the obstructing class must satisfy
//   (i)   3 S > a_e k
//   (ii)  3 s S <= (s+1) a_e k
//   (iii) 2^{3/2}/3 * sum m_i^{3/2} <= (sum degrees_Y + 5 a_e / 3) k
//   (iv)  e! k >= prod q_i            (only with special-form degrees)
//   (v)   m_i >= 1
// Degrees are special-form when every a_i (i < e) equals (e+1)! * q_i with
// pairwise coprime q_i; otherwise leg (iv) is omitted and verdicts are marked
// as coming from a partial system.
struct SurfaceSystem {
  std::int64_t e = 2;
  std::vector<Int> degrees_Y;
  Int a_e;
  std::int64_t s = 2;
  Int alpha;
  bool special_form = false;
  std::vector<Int> q;  // set when special_form
};

SurfaceSystem make_surface_system(std::int64_t e,
                                  const std::vector<Int>& degrees_Y,
                                  const Int& a_e, std::int64_t s);

// Numerical curve class (degree; multiplicities).
struct CurveClass {
  Int degree;
  std::vector<Int> mults;
};

enum class Decision { Satisfied, Violated, Undecided };

struct ConstraintCheck {
  std::string name;
  Decision status = Decision::Undecided;
  std::string detail;
};

// Certified admissible range for the curve degree k, with the inequality that
// produced each endpoint. upper is absent when no finite bound was derived.
struct KInterval {
  Int lower;
  std::string lower_source;
  std::optional<Int> upper;
  std::string upper_source;

  bool is_empty() const { return upper.has_value() && *upper < lower; }
};

enum class Outcome {
  Infeasible,               // certified: no curve class satisfies the system
  InfeasibleWithinHorizon,  // none found within the search bounds only
  Witness                   // explicit satisfying class
};

struct FeasibilityVerdict {
  Outcome outcome = Outcome::InfeasibleWithinHorizon;
  KInterval interval;
  std::optional<CurveClass> witness;
  bool partial_system = false;
  std::int64_t undecided_cells = 0;
  std::string note;
};

// Evaluates constraints (i)-(iv) exactly for one candidate class; preserves
// strict vs non-strict comparisons verbatim.
std::vector<ConstraintCheck> codim2_constraints(const Codim2System& sys,
                                                const Int& k,
                                                const std::vector<Int>& mults);

// Decides the system by deriving the certified k-interval (lower bound from
// nonnegativity of the singularity count, upper bound from the quadratic-mean
// chain solved exactly for k) and exhaustively scanning the interval when it
// is nonempty. When the chain coefficient is nonpositive the interval has no
// derived upper endpoint and the decision falls back to a bounded search of
// horizon fallback_k_max (default 5a).
FeasibilityVerdict codim2_decide_analytic(
    const Codim2System& sys, std::optional<Int> fallback_k_max = std::nullopt);

// Independent oracle: bounded exhaustive scan over k in [1, k_max]. For fixed
// k and S the minimum of sum m_i(m_i - 1) over integer vectors with m_i >= 1
// is attained at the balanced partition, so scanning (k, S) pairs with the
// balanced candidate decides existence.
FeasibilityVerdict codim2_decide_bruteforce(const Codim2System& sys,
                                            const Int& k_max);

// Constraint evaluation for the surface system. Legs (i), (ii), (iv), (v)
// are decided exactly; leg (iii) through enclosures with outward rounding,
// escalating the precision up to four times the request before reporting
// Undecided.
std::vector<ConstraintCheck> surface_constraints(const SurfaceSystem& sys,
                                                 const Int& k,
                                                 const std::vector<Int>& mults,
                                                 int precision = 12);

// Surface decision: the k upper bound comes from squaring the power-mean
// chain (rational on both sides once squared), the lower bound from the
// divisibility leg when present; a nonempty interval is scanned with balanced
// candidates, leg (iii) checked by enclosure.
FeasibilityVerdict surface_decide(const SurfaceSystem& sys, const Int& k_max,
                                  int precision = 12);

struct InductionStep {
  std::int64_t s = 0;
  FeasibilityVerdict verdict;
};

// Mechanical replay of the induction over the number of points: runs the
// decision procedure for every step s = 2, ..., r-1 where r is the integer
// point count granted by the corresponding bound.
struct InductionReport {
  std::string theorem;  // "codim2" | "surface"
  Int r;
  std::vector<InductionStep> steps;
  bool all_certified_infeasible = true;
  bool witness_found = false;
};

InductionReport verify_codim2_induction(
    std::int64_t n, const Int& a, const Int& b,
    std::optional<Int> k_max = std::nullopt);

InductionReport verify_surface_induction(
    std::int64_t e, const std::vector<Int>& adjusted,
    std::optional<Int> k_max = std::nullopt, int precision = 12);

}  // namespace covgon
