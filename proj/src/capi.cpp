// SPDX-License-Identifier: Apache-2.0
#include "covgon.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "covgon/dimcount.hpp"
#include "covgon/errors.hpp"
#include "covgon/feasibility.hpp"
#include "covgon/genus.hpp"
#include "covgon/gonality.hpp"
#include "covgon/hilbert.hpp"
#include "covgon/primes.hpp"
#include "covgon/report_json.hpp"

using covgon::Int;
using covgon::Rat;
using ordered_json = nlohmann::ordered_json;

struct covgon_ctx {
  std::int64_t precision = 12;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string error_json(const std::string& kind, const std::string& name,
                       const std::string& detail) {
  ordered_json j;
  j["error"] = kind;
  j["name"] = name;
  j["detail"] = detail;
  return j.dump(2);
}

std::vector<Int> parse_list(const char* const* items, size_t count) {
  if (items == nullptr && count > 0) {
    throw std::invalid_argument("null list");
  }
  std::vector<Int> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (items[i] == nullptr) throw std::invalid_argument("null list entry");
    out.push_back(covgon::parse_int(items[i]));
  }
  return out;
}

Int parse_required(const char* text, const char* what) {
  if (text == nullptr) {
    throw std::invalid_argument(std::string("missing argument: ") + what);
  }
  return covgon::parse_int(text);
}

ordered_json list_json(const std::vector<Int>& xs) {
  ordered_json arr = ordered_json::array();
  for (const Int& x : xs) arr.push_back(covgon::json::int_json(x));
  return arr;
}

// Runs `fn` (returning the report json plus a status) under the shared
// exception-to-status mapping.
template <typename Fn>
covgon_status run(covgon_ctx* ctx, char** json_out, Fn&& fn) {
  if (ctx == nullptr || json_out == nullptr) return COVGON_USAGE_ERROR;
  try {
    auto [report, status] = fn();
    *json_out = dup_string(report.dump(2));
    if (*json_out == nullptr) return COVGON_INTERNAL_ERROR;
    return status;
  } catch (const covgon::hypothesis_error& e) {
    ctx->last_error = error_json("hypothesis", e.hypothesis(), e.detail());
    return COVGON_HYPOTHESIS_ERROR;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = error_json("usage", "", e.what());
    return COVGON_USAGE_ERROR;
  } catch (const std::exception& e) {
    ctx->last_error = error_json("internal", "", e.what());
    return COVGON_INTERNAL_ERROR;
  }
}

template <typename Fn>
covgon_status run_ok(covgon_ctx* ctx, char** json_out, Fn&& fn) {
  return run(ctx, json_out, [&] {
    return std::make_pair(fn(), COVGON_OK);
  });
}

}  // namespace

extern "C" {

covgon_ctx* covgon_ctx_new(void) { return new (std::nothrow) covgon_ctx; }

void covgon_ctx_free(covgon_ctx* ctx) { delete ctx; }

covgon_status covgon_ctx_set_precision(covgon_ctx* ctx, int64_t precision) {
  if (ctx == nullptr) return COVGON_USAGE_ERROR;
  if (precision < 1 || precision > 4096) {
    ctx->last_error =
        error_json("usage", "", "precision must lie in [1, 4096]");
    return COVGON_USAGE_ERROR;
  }
  ctx->precision = precision;
  return COVGON_OK;
}

int64_t covgon_ctx_precision(const covgon_ctx* ctx) {
  return ctx == nullptr ? 0 : ctx->precision;
}

const char* covgon_last_error(const covgon_ctx* ctx) {
  return ctx == nullptr ? "" : ctx->last_error.c_str();
}

void covgon_str_free(char* s) { std::free(s); }

const char* covgon_version(void) { return "0.1.0"; }

covgon_status covgon_bound_codim2(covgon_ctx* ctx, int64_t n, const char* a,
                                  const char* b, char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const Int av = parse_required(a, "a");
    const Int bv = parse_required(b, "b");
    const covgon::BoundCertificate cert = covgon::cg_bound_codim2(n, av, bv);
    ordered_json j;
    j["operation"] = "bound-codim2";
    j["n"] = n;
    j["a"] = covgon::json::int_json(av);
    j["b"] = covgon::json::int_json(bv);
    j.update(covgon::json::certificate_json(cert));
    return j;
  });
}

covgon_status covgon_bound_surface_special(covgon_ctx* ctx, int64_t e,
                                           const char* const* adjusted,
                                           size_t count, char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const std::vector<Int> adj = parse_list(adjusted, count);
    const covgon::BoundCertificate cert =
        covgon::cg_bound_surface_special(e, adj);
    ordered_json j;
    j["operation"] = "bound-surface-special";
    j["e"] = e;
    j["adjusted"] = list_json(adj);
    j.update(covgon::json::certificate_json(cert));
    return j;
  });
}

covgon_status covgon_bound_surface_general(covgon_ctx* ctx, int64_t e,
                                           const char* const* degrees,
                                           size_t count, char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const std::vector<Int> degs = parse_list(degrees, count);
    const covgon::BoundCertificate cert =
        covgon::cg_bound_surface_general(e, degs);
    ordered_json j;
    j["operation"] = "bound-surface-general";
    j["e"] = e;
    j["degrees"] = list_json(degs);
    j.update(covgon::json::certificate_json(cert));
    return j;
  });
}

covgon_status covgon_constants(covgon_ctx* ctx, int64_t e, char** json_out) {
  return run_ok(ctx, json_out, [&] {
    ordered_json j;
    j["operation"] = "constants";
    j["e"] = e;
    j["A"] = covgon::json::int_json(covgon::constant_A(e));
    j["B"] = covgon::json::rat_json(covgon::constant_B(e));
    return j;
  });
}

covgon_status covgon_hilbert(covgon_ctx* ctx, int64_t n, int64_t codim,
                             const char* const* degrees, size_t count,
                             const char* twist, int include_series_oracle,
                             char** json_out) {
  return run_ok(ctx, json_out, [&] {
    if (codim != static_cast<int64_t>(count)) {
      throw std::invalid_argument("codim must equal the number of degrees");
    }
    const std::vector<Int> degs = parse_list(degrees, count);
    const Int tw = parse_required(twist, "twist");
    const covgon::CiSpec spec(n, degs);
    ordered_json j;
    j["operation"] = "hilbert";
    j["n"] = n;
    j["codim"] = codim;
    j["degrees"] = list_json(degs);
    j["twist"] = covgon::json::int_json(tw);
    j["nested"] = covgon::json::int_json(covgon::h0_ci_nested(spec, tw));
    j["koszul"] = covgon::json::int_json(covgon::h0_ci_koszul(spec, tw));
    if (include_series_oracle != 0) {
      j["series"] = covgon::json::int_json(covgon::h0_series_oracle(spec, tw));
    }
    return j;
  });
}

covgon_status covgon_ramanujan_prime(covgon_ctx* ctx, int64_t n,
                                     const char* verify_horizon,
                                     char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const Int r = covgon::ramanujan_prime(n);
    ordered_json j;
    j["operation"] = "ramanujan-prime";
    j["n"] = n;
    j["ramanujan_prime"] = covgon::json::int_json(r);
    if (verify_horizon != nullptr) {
      const Int horizon = covgon::parse_int(verify_horizon);
      if (horizon > 0) {
        bool ok = true;
        Int first_failure = 0;
        for (Int x = r; x <= horizon; ++x) {
          Int half;
          mpz_fdiv_q_ui(half.get_mpz_t(), x.get_mpz_t(), 2);
          if (covgon::prime_pi(x) - covgon::prime_pi(half) < n) {
            ok = false;
            first_failure = x;
            break;
          }
        }
        j["property_verified_to"] = covgon::json::int_json(horizon);
        j["property_holds"] = ok;
        if (!ok) j["first_failure"] = covgon::json::int_json(first_failure);
      }
    }
    return j;
  });
}

covgon_status covgon_prime_pi(covgon_ctx* ctx, const char* x,
                              char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const Int xv = parse_required(x, "x");
    ordered_json j;
    j["operation"] = "prime-pi";
    j["x"] = covgon::json::int_json(xv);
    j["count"] = covgon::json::int_json(covgon::prime_pi(xv));
    return j;
  });
}

covgon_status covgon_select_prime_degrees(covgon_ctx* ctx, int64_t e,
                                          const char* const* degrees,
                                          size_t count, char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const std::vector<Int> degs = parse_list(degrees, count);
    const covgon::PrimeDegreeSelection sel =
        covgon::select_prime_degrees(e, degs);
    ordered_json j;
    j["operation"] = "select-prime-degrees";
    j.update(covgon::json::selection_json(sel));
    return j;
  });
}

covgon_status covgon_min_curve_degree(covgon_ctx* ctx, int64_t n, int64_t f,
                                      const char* const* factors, size_t count,
                                      char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const std::vector<Int> qs = parse_list(factors, count);
    const Int d = covgon::min_curve_degree(n, f, qs);
    ordered_json j;
    j["operation"] = "min-curve-degree";
    j["n"] = n;
    j["codim"] = f;
    j["factors"] = list_json(qs);
    j["min_degree"] = covgon::json::int_json(d);
    return j;
  });
}

covgon_status covgon_genus_lower(covgon_ctx* ctx, int64_t n, int64_t codim,
                                 const char* const* degrees, size_t count,
                                 const char* curve_degree, char** json_out) {
  return run_ok(ctx, json_out, [&] {
    if (codim != static_cast<int64_t>(count)) {
      throw std::invalid_argument("codim must equal the number of degrees");
    }
    const std::vector<Int> degs = parse_list(degrees, count);
    const Int deg = parse_required(curve_degree, "degree");
    const Rat bound = covgon::genus_lower_bound(covgon::CiSpec(n, degs), deg);
    ordered_json j;
    j["operation"] = "genus-lower-bound";
    j["n"] = n;
    j["codim"] = codim;
    j["degrees"] = list_json(degs);
    j["degree"] = covgon::json::int_json(deg);
    j["bound"] = covgon::json::rat_json(bound);
    return j;
  });
}

covgon_status covgon_genus_gap(covgon_ctx* ctx, const char* degree,
                               const char* genus_lb, char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const Int deg = parse_required(degree, "degree");
    if (genus_lb == nullptr) {
      throw std::invalid_argument("missing argument: genus lower bound");
    }
    const Rat g = covgon::parse_rat(genus_lb);
    const Rat bound = covgon::plane_gap_bound(deg, g);
    ordered_json j;
    j["operation"] = "plane-gap-bound";
    j["degree"] = covgon::json::int_json(deg);
    j["genus_lower_bound"] = covgon::json::rat_json(g);
    j["bound"] = covgon::json::rat_json(bound);
    return j;
  });
}

covgon_status covgon_genus_delta(covgon_ctx* ctx, int64_t n, const char* mult,
                                 char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const Int m = parse_required(mult, "mult");
    const Int bound =
        covgon::delta_lower_bound(n, m, static_cast<int>(ctx->precision));
    ordered_json j;
    j["operation"] = "delta-lower-bound";
    j["n"] = n;
    j["mult"] = covgon::json::int_json(m);
    j["precision"] = ctx->precision;
    j["bound"] = covgon::json::int_json(bound);
    return j;
  });
}

covgon_status covgon_genus_castelnuovo(covgon_ctx* ctx,
                                       const char* const* degrees_y,
                                       size_t count, const char* a_e,
                                       const char* curve_degree,
                                       char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const std::vector<Int> degs = parse_list(degrees_y, count);
    const Int ae = parse_required(a_e, "a_e");
    const Int deg = parse_required(curve_degree, "degree");
    const Rat bound = covgon::castelnuovo_upper_bound(degs, ae, deg);
    ordered_json j;
    j["operation"] = "castelnuovo-upper-bound";
    j["degrees_y"] = list_json(degs);
    j["a_e"] = covgon::json::int_json(ae);
    j["degree"] = covgon::json::int_json(deg);
    j["bound"] = covgon::json::rat_json(bound);
    return j;
  });
}

covgon_status covgon_genus_min_power_sum(covgon_ctx* ctx, const char* total,
                                         const char* parts,
                                         const char* exponent,
                                         char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const Int tot = parse_required(total, "total");
    const Int prt = parse_required(parts, "parts");
    if (exponent == nullptr) {
      throw std::invalid_argument("missing argument: exponent");
    }
    const Rat exp = covgon::parse_rat(exponent);
    const Int num(mpq_numref(exp.get_mpq_t()));
    const Int den(mpq_denref(exp.get_mpq_t()));
    const covgon::Enclosure e = covgon::min_power_sum(
        tot, prt, num, den, static_cast<int>(ctx->precision));
    ordered_json j;
    j["operation"] = "min-power-sum";
    j["total"] = covgon::json::int_json(tot);
    j["parts"] = covgon::json::int_json(prt);
    j["exponent"] = covgon::json::rat_json(exp);
    j["precision"] = ctx->precision;
    j["enclosure"] = covgon::json::enclosure_json(e);
    return j;
  });
}

covgon_status covgon_verify_codim2(covgon_ctx* ctx, int64_t n, const char* a,
                                   const char* b, const char* k_max,
                                   char** json_out) {
  return run(ctx, json_out, [&] {
    const Int av = parse_required(a, "a");
    const Int bv = parse_required(b, "b");
    std::optional<Int> horizon;
    if (k_max != nullptr) horizon = covgon::parse_int(k_max);
    const covgon::InductionReport report =
        covgon::verify_codim2_induction(n, av, bv, horizon);
    ordered_json j;
    j["operation"] = "verify-codim2";
    j["n"] = n;
    j["a"] = covgon::json::int_json(av);
    j["b"] = covgon::json::int_json(bv);
    j.update(covgon::json::induction_json(report));
    return std::make_pair(
        std::move(j), report.witness_found ? COVGON_WITNESS_FOUND : COVGON_OK);
  });
}

covgon_status covgon_verify_surface(covgon_ctx* ctx, int64_t e,
                                    const char* const* adjusted, size_t count,
                                    const char* k_max, char** json_out) {
  return run(ctx, json_out, [&] {
    const std::vector<Int> adj = parse_list(adjusted, count);
    std::optional<Int> horizon;
    if (k_max != nullptr) horizon = covgon::parse_int(k_max);
    const covgon::InductionReport report = covgon::verify_surface_induction(
        e, adj, horizon, static_cast<int>(ctx->precision));
    ordered_json j;
    j["operation"] = "verify-surface";
    j["e"] = e;
    j["adjusted"] = list_json(adj);
    j.update(covgon::json::induction_json(report));
    return std::make_pair(
        std::move(j), report.witness_found ? COVGON_WITNESS_FOUND : COVGON_OK);
  });
}

covgon_status covgon_dimcheck_first(covgon_ctx* ctx, int64_t e,
                                    const char* const* degrees_y, size_t count,
                                    const char* a_e, int64_t s,
                                    char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const std::vector<Int> degs = parse_list(degrees_y, count);
    const Int ae = parse_required(a_e, "a_e");
    const covgon::DimCountReport report =
        covgon::check_first_surface(e, degs, ae, s);
    ordered_json j;
    j["operation"] = "dimcheck-first";
    j["e"] = e;
    j["degrees_y"] = list_json(degs);
    j["a_e"] = covgon::json::int_json(ae);
    j["s"] = s;
    j.update(covgon::json::dimcount_json(report));
    return j;
  });
}

covgon_status covgon_dimcheck_second(covgon_ctx* ctx, int64_t e,
                                     const char* const* degrees_y, size_t count,
                                     const char* b1, const char* a_e, int64_t s,
                                     char** json_out) {
  return run_ok(ctx, json_out, [&] {
    const std::vector<Int> degs = parse_list(degrees_y, count);
    const Int b1v = parse_required(b1, "b1");
    const Int ae = parse_required(a_e, "a_e");
    const covgon::DimCountReport report =
        covgon::check_second_surface(e, degs, b1v, ae, s);
    ordered_json j;
    j["operation"] = "dimcheck-second";
    j["e"] = e;
    j["degrees_y"] = list_json(degs);
    j["b1"] = covgon::json::int_json(b1v);
    j["a_e"] = covgon::json::int_json(ae);
    j["s"] = s;
    j.update(covgon::json::dimcount_json(report));
    return j;
  });
}

}  // extern "C"
