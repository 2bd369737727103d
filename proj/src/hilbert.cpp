// SPDX-License-Identifier: Apache-2.0
#include "covgon/hilbert.hpp"

#include <stdexcept>

namespace covgon {

namespace {

constexpr std::int64_t kMaxCodim = 62;
constexpr std::uint64_t kMaxSeriesTwist = 2000000;

void nested_sum(const CiSpec& spec, std::size_t level, const Int& remaining,
                Int& total) {
  const auto& degs = spec.degrees();
  if (level == degs.size()) {
    total += h0_projective(spec.dim(), remaining);
    return;
  }
  // Index values past `remaining` only contribute zero terms; skip them.
  Int cap = degs[level] - 1;
  if (remaining < cap) cap = remaining;
  for (Int j = 0; j <= cap; ++j) {
    nested_sum(spec, level + 1, Int(remaining - j), total);
  }
}

}  // namespace

CiSpec::CiSpec(std::int64_t dim, std::vector<Int> degrees)
    : dim_(dim), degrees_(std::move(degrees)) {
  if (dim_ < 1) {
    throw std::invalid_argument("CiSpec: dimension must be >= 1");
  }
  if (static_cast<std::int64_t>(degrees_.size()) > kMaxCodim) {
    throw std::invalid_argument("CiSpec: codimension too large");
  }
  for (const Int& d : degrees_) {
    if (d < 1) {
      throw std::invalid_argument("CiSpec: degrees must be >= 1");
    }
  }
}

Int h0_projective(std::int64_t n, const Int& twist) {
  if (n < 0) {
    throw std::invalid_argument("h0_projective: dimension must be >= 0");
  }
  return binomial(twist + n, Int(n));
}

Int h0_ci_koszul(const CiSpec& spec, const Int& twist) {
  const auto& degs = spec.degrees();
  const std::size_t f = degs.size();
  const std::int64_t ambient = spec.ambient_dim();
  Int total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
    Int shift = 0;
    int bits = 0;
    for (std::size_t i = 0; i < f; ++i) {
      if (mask >> i & 1) {
        shift += degs[i];
        ++bits;
      }
    }
    const Int term = h0_projective(ambient, Int(twist - shift));
    if (bits % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Int h0_ci_nested(const CiSpec& spec, const Int& twist) {
  if (sgn(twist) < 0) return 0;
  Int total = 0;
  nested_sum(spec, 0, twist, total);
  return total;
}

Int h0_series_oracle(const CiSpec& spec, const Int& twist) {
  if (sgn(twist) < 0) {
    throw std::invalid_argument("h0_series_oracle: twist must be >= 0");
  }
  const std::uint64_t len = to_u64(twist);
  if (len > kMaxSeriesTwist) {
    throw std::invalid_argument("h0_series_oracle: twist too large");
  }

  std::vector<Int> coeff(len + 1, Int(0));
  coeff[0] = 1;
  // Numerator prod (1 - t^{a_i}), truncated at degree `len`.
  for (const Int& a : spec.degrees()) {
    if (a > twist) continue;
    const std::uint64_t aa = to_u64(a);
    for (std::uint64_t j = len; j >= aa; --j) {
      coeff[j] -= coeff[j - aa];
      if (j == aa) break;
    }
  }
  // Divide by (1 - t)^(ambient + 1): each division is a prefix sum.
  const std::int64_t passes = spec.ambient_dim() + 1;
  for (std::int64_t p = 0; p < passes; ++p) {
    for (std::uint64_t j = 1; j <= len; ++j) coeff[j] += coeff[j - 1];
  }
  return coeff[len];
}

}  // namespace covgon
