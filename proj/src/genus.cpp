// SPDX-License-Identifier: Apache-2.0
#include "covgon/genus.hpp"

#include <stdexcept>

namespace covgon {

CurveOnCI::CurveOnCI(CiSpec ambient, Int degree, std::vector<Int> mults)
    : ambient_(std::move(ambient)),
      degree_(std::move(degree)),
      mults_(std::move(mults)) {
  if (degree_ < 1) {
    throw std::invalid_argument("CurveOnCI: degree must be >= 1");
  }
  Int total = 0;
  for (const Int& m : mults_) {
    if (sgn(m) < 0) {
      throw std::invalid_argument("CurveOnCI: multiplicities must be >= 0");
    }
    total += m;
  }
  if (total > degree_ * ambient_.ambient_dim()) {
    throw std::invalid_argument(
        "CurveOnCI: total multiplicity exceeds degree * ambient dimension");
  }
}

Rat genus_lower_bound(const CiSpec& spec, const Int& degree) {
  if (spec.dim() < 2) {
    throw std::invalid_argument("genus_lower_bound: dimension must be >= 2");
  }
  if (degree < 1) {
    throw std::invalid_argument("genus_lower_bound: degree must be >= 1");
  }
  Int coeff = -2 * spec.dim() - spec.codim();
  for (const Int& d : spec.degrees()) coeff += d;
  return 1 + make_rat(coeff * degree, Int(2));
}

Rat plane_gap_bound(const Int& degree, const Rat& genus_lb) {
  if (degree < 1) {
    throw std::invalid_argument("plane_gap_bound: degree must be >= 1");
  }
  return make_rat((degree - 1) * (degree - 2), Int(2)) - genus_lb;
}

Int delta_lower_bound(std::int64_t n, const Int& m, int precision) {
  if (n < 2) {
    throw std::invalid_argument("delta_lower_bound: n must be >= 2");
  }
  if (m < 1) {
    throw std::invalid_argument("delta_lower_bound: m must be >= 1");
  }
  const Rat target = make_rat(1, pow_int(10, static_cast<std::uint64_t>(
                                                 precision < 1 ? 1 : precision)));
  for (int working = precision < 1 ? 1 : precision;; working *= 2) {
    const Enclosure coeff =
        power_enclosure(Int(n - 1), Int(n), Int(n - 1), working);
    const Enclosure mpow = power_enclosure(m, Int(n), Int(n - 1), working);
    const Enclosure value =
        make_rat(1, Int(n)) * (coeff * mpow) - Enclosure::point(Rat(n * m));
    if (value.width() <= target) {
      Int best = floor_rat(value.lower());
      if (sgn(best) < 0) best = 0;
      return best;
    }
    if (working > 1 << 20) {
      throw std::logic_error("delta_lower_bound failed to narrow");
    }
  }
}

Rat castelnuovo_upper_bound(const std::vector<Int>& degrees_Y, const Int& a_e,
                            const Int& degree) {
  if (degree < 1) {
    throw std::invalid_argument("castelnuovo_upper_bound: degree must be >= 1");
  }
  Int total = 0;
  for (const Int& d : degrees_Y) total += d;
  return (Rat(total) + make_rat(2 * a_e, Int(3))) * Rat(degree);
}

Enclosure min_power_sum(const Int& total, const Int& parts, const Int& exp_num,
                        const Int& exp_den, int precision) {
  if (parts < 1 || total < parts) {
    throw std::invalid_argument("min_power_sum: need total >= parts >= 1");
  }
  if (sgn(exp_den) < 1 || exp_num < exp_den) {
    throw std::invalid_argument("min_power_sum: exponent must be >= 1");
  }
  const Rat avg = make_rat(total, parts);
  Rat exponent = make_rat(exp_num, exp_den);
  const Int num(mpq_numref(exponent.get_mpq_t()));
  const Int den(mpq_denref(exponent.get_mpq_t()));
  if (den == 1) {
    const std::uint64_t e = to_u64(num);
    const Rat value =
        make_rat(parts * pow_int(Int(mpq_numref(avg.get_mpq_t())), e),
                 pow_int(Int(mpq_denref(avg.get_mpq_t())), e));
    return Enclosure::point(value);
  }
  const Rat target =
      make_rat(1, pow_int(10, static_cast<std::uint64_t>(
                                  precision < 1 ? 1 : precision)));
  for (int working = precision < 1 ? 1 : precision;; working *= 2) {
    const Enclosure scaled =
        Rat(parts) * power_enclosure(avg, num, den, working);
    if (scaled.width() <= target) return scaled;
    if (working > 1 << 20) {
      throw std::logic_error("min_power_sum failed to narrow");
    }
  }
}

}  // namespace covgon
