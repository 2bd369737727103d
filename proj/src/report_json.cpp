// SPDX-License-Identifier: Apache-2.0
#include "covgon/report_json.hpp"

namespace covgon::json {

namespace {

const char* outcome_str(Outcome o) {
  switch (o) {
    case Outcome::Infeasible:
      return "infeasible";
    case Outcome::InfeasibleWithinHorizon:
      return "infeasible-within-horizon";
    case Outcome::Witness:
      return "witness";
  }
  return "unknown";
}

const char* decision_str(Decision d) {
  switch (d) {
    case Decision::Satisfied:
      return "satisfied";
    case Decision::Violated:
      return "violated";
    case Decision::Undecided:
      return "undecided";
  }
  return "unknown";
}

}  // namespace

ordered_json int_json(const Int& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(to_string(v));
}

ordered_json rat_json(const Rat& v) { return ordered_json(to_string(v)); }

Int int_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  return parse_int(j.get<std::string>());
}

Rat rat_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  return parse_rat(j.get<std::string>());
}

ordered_json enclosure_json(const Enclosure& e) {
  ordered_json j;
  j["lower"] = rat_json(e.lower());
  j["upper"] = rat_json(e.upper());
  return j;
}

ordered_json certificate_json(const BoundCertificate& cert) {
  ordered_json j;
  j["bound"] = rat_json(cert.bound);
  j["guarantee"] = int_json(cert.guarantee);
  ordered_json hyps = ordered_json::array();
  for (const auto& h : cert.hypotheses) {
    ordered_json one;
    one["name"] = h.name;
    one["satisfied"] = h.satisfied;
    one["detail"] = h.detail;
    hyps.push_back(std::move(one));
  }
  j["hypotheses"] = std::move(hyps);
  ordered_json consts = ordered_json::array();
  for (const auto& [name, value] : cert.constants) {
    ordered_json one;
    one["name"] = name;
    one["value"] = rat_json(value);
    consts.push_back(std::move(one));
  }
  j["constants"] = std::move(consts);
  return j;
}

ordered_json selection_json(const PrimeDegreeSelection& sel) {
  ordered_json j;
  j["e"] = sel.e;
  ordered_json in = ordered_json::array();
  for (const auto& d : sel.input_degrees) in.push_back(int_json(d));
  j["input_degrees"] = std::move(in);
  ordered_json ps = ordered_json::array();
  for (const auto& p : sel.primes) ps.push_back(int_json(p));
  j["primes"] = std::move(ps);
  ordered_json adj = ordered_json::array();
  for (const auto& a : sel.adjusted) adj.push_back(int_json(a));
  j["adjusted"] = std::move(adj);
  j["fallback_used"] = sel.fallback_used;
  return j;
}

ordered_json constraint_checks_json(const std::vector<ConstraintCheck>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json one;
    one["name"] = c.name;
    one["status"] = decision_str(c.status);
    one["detail"] = c.detail;
    arr.push_back(std::move(one));
  }
  return arr;
}

ordered_json verdict_json(const FeasibilityVerdict& v) {
  ordered_json j;
  j["outcome"] = outcome_str(v.outcome);
  ordered_json interval;
  interval["k_lower"] = int_json(v.interval.lower);
  interval["k_lower_source"] = v.interval.lower_source;
  if (v.interval.upper.has_value()) {
    interval["k_upper"] = int_json(*v.interval.upper);
    interval["k_upper_source"] = v.interval.upper_source;
  } else {
    interval["k_upper"] = nullptr;
    interval["k_upper_source"] = "";
  }
  interval["empty"] = v.interval.is_empty();
  j["interval"] = std::move(interval);
  if (v.witness.has_value()) {
    ordered_json w;
    w["k"] = int_json(v.witness->degree);
    ordered_json ms = ordered_json::array();
    for (const auto& m : v.witness->mults) ms.push_back(int_json(m));
    w["mults"] = std::move(ms);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["partial_system"] = v.partial_system;
  j["undecided_cells"] = v.undecided_cells;
  j["note"] = v.note;
  return j;
}

ordered_json induction_json(const InductionReport& r) {
  ordered_json j;
  j["theorem"] = r.theorem;
  j["r"] = int_json(r.r);
  ordered_json steps = ordered_json::array();
  for (const auto& step : r.steps) {
    ordered_json one;
    one["s"] = step.s;
    one["verdict"] = verdict_json(step.verdict);
    steps.push_back(std::move(one));
  }
  j["steps"] = std::move(steps);
  j["all_certified_infeasible"] = r.all_certified_infeasible;
  j["witness_found"] = r.witness_found;
  return j;
}

ordered_json dimcount_json(const DimCountReport& r) {
  ordered_json j;
  j["exact_h0"] = int_json(r.exact_h0);
  j["estimate_lower_bound"] = rat_json(r.estimate_lower_bound);
  j["required"] = int_json(r.required);
  j["exact_pass"] = r.exact_pass;
  j["estimate_pass"] = r.estimate_pass;
  return j;
}

}  // namespace covgon::json
