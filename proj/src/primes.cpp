// SPDX-License-Identifier: Apache-2.0
#include "covgon/primes.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>

#include "covgon/enclosure.hpp"
#include "covgon/errors.hpp"

namespace covgon {

namespace {

constexpr std::uint64_t kSieveCap = 100000000;  // practical per-process bound

// Process-wide prime cache. Lazily extended segmented sieve; reads take a
// shared lock, extension an exclusive one (single-writer contract).
class SieveCache {
 public:
  static SieveCache& instance() {
    static SieveCache cache;
    return cache;
  }

  std::uint64_t pi(std::uint64_t x) {
    ensure(x);
    std::shared_lock lock(mu_);
    return static_cast<std::uint64_t>(
        std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
  }

  bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    ensure(x);
    std::shared_lock lock(mu_);
    return std::binary_search(primes_.begin(), primes_.end(), x);
  }

  // Largest prime in [lo, hi] not contained in `used`; 0 when none exists.
  std::uint64_t largest_prime_in(std::uint64_t lo, std::uint64_t hi,
                                 const std::set<std::uint64_t>& used) {
    if (hi < lo || hi < 2) return 0;
    ensure(hi);
    std::shared_lock lock(mu_);
    auto it = std::upper_bound(primes_.begin(), primes_.end(), hi);
    while (it != primes_.begin()) {
      --it;
      if (*it < lo) break;
      if (!used.count(*it)) return *it;
    }
    return 0;
  }

  std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < lo || hi < 2) return out;
    ensure(hi);
    std::shared_lock lock(mu_);
    auto it = std::lower_bound(primes_.begin(), primes_.end(), lo);
    for (; it != primes_.end() && *it <= hi; ++it) out.push_back(*it);
    return out;
  }

 private:
  void ensure(std::uint64_t n) {
    if (n > kSieveCap) {
      throw std::invalid_argument("prime sieve request exceeds supported cap");
    }
    {
      std::shared_lock lock(mu_);
      if (n <= limit_) return;
    }
    std::unique_lock lock(mu_);
    while (limit_ < n) {
      // Doubling keeps the new limit at most limit_^2, so the cached primes
      // always cover the square root of the next segment.
      const std::uint64_t next =
          std::min(std::max(2 * limit_, n), std::min(limit_ * limit_,
                                                     kSieveCap));
      std::vector<bool> composite(next - limit_, false);
      for (const std::uint64_t p : primes_) {
        if (p * p > next) break;
        std::uint64_t start = ((limit_ / p) + 1) * p;
        if (start < p * p) start = p * p;
        for (std::uint64_t v = start; v <= next; v += p) {
          composite[v - limit_ - 1] = true;
        }
      }
      for (std::uint64_t v = limit_ + 1; v <= next; ++v) {
        if (!composite[v - limit_ - 1]) primes_.push_back(v);
      }
      limit_ = next;
    }
  }

  mutable std::shared_mutex mu_;
  std::vector<std::uint64_t> primes_ = {2, 3};
  std::uint64_t limit_ = 3;
};

}  // namespace

Int prime_pi(const Int& x) {
  if (sgn(x) < 0) {
    throw std::invalid_argument("prime_pi: argument must be nonnegative");
  }
  if (x < 2) return 0;
  return Int(static_cast<unsigned long>(SieveCache::instance().pi(to_u64(x))));
}

bool is_prime(const Int& x) {
  if (x < 2) return false;
  return SieveCache::instance().is_prime(to_u64(x));
}

Int ramanujan_prime(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("ramanujan_prime: n must be >= 1");
  }
  // Above ceil(4n log 4n) the defining property holds unconditionally, so the
  // largest failure below that bound pins the answer.
  const Enclosure lg = log_enclosure(Rat(4 * Int(n)), 12);
  const std::uint64_t bound = to_u64(ceil_rat(Rat(4 * Int(n)) * lg.upper()));
  auto& sieve = SieveCache::instance();
  std::uint64_t worst = 1;  // pi(1) - pi(0) = 0 < n always fails
  for (std::uint64_t x = 2; x <= bound; ++x) {
    if (sieve.pi(x) - sieve.pi(x / 2) < static_cast<std::uint64_t>(n)) {
      worst = x;
    }
  }
  return Int(static_cast<unsigned long>(worst + 1));
}

Int degree_threshold(std::int64_t e) {
  if (e < 2) {
    throw std::invalid_argument("degree_threshold: e must be >= 2");
  }
  const Int scale = factorial(Int(e + 1)) * 4 * (e - 1);
  const Enclosure lg = log_enclosure(Rat(4 * Int(e - 1)), 12);
  return ceil_rat(Rat(scale) * lg.upper());
}

namespace {

struct Window {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

// Exhaustive matching of distinct primes to windows; only invoked if the
// greedy pass gets stuck (which the threshold precondition rules out).
bool match_windows(const std::vector<std::vector<std::uint64_t>>& candidates,
                   std::size_t index, std::set<std::uint64_t>& used,
                   std::vector<std::uint64_t>& chosen) {
  if (index == candidates.size()) return true;
  for (const std::uint64_t p : candidates[index]) {
    if (used.count(p)) continue;
    used.insert(p);
    chosen[index] = p;
    if (match_windows(candidates, index + 1, used, chosen)) return true;
    used.erase(p);
  }
  return false;
}

}  // namespace

PrimeDegreeSelection select_prime_degrees(std::int64_t e,
                                          const std::vector<Int>& degrees) {
  if (e < 3) {
    throw std::invalid_argument("select_prime_degrees: e must be >= 3");
  }
  if (degrees.size() != static_cast<std::size_t>(e - 1)) {
    throw std::invalid_argument(
        "select_prime_degrees: need exactly e-1 degrees");
  }
  for (std::size_t i = 0; i + 1 < degrees.size(); ++i) {
    if (degrees[i] > degrees[i + 1]) {
      throw std::invalid_argument(
          "select_prime_degrees: degrees must be ascending");
    }
  }
  const Int threshold = degree_threshold(e);
  if (degrees.front() < threshold) {
    throw hypothesis_error(
        "threshold", "d_1 = " + to_string(degrees.front()) +
                         " is below the degree threshold A(e) = " +
                         to_string(threshold));
  }

  const Int fact = factorial(Int(e + 1));
  const std::size_t count = degrees.size();
  std::vector<Window> windows(count);
  for (std::size_t i = 0; i < count; ++i) {
    Int lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), degrees[i].get_mpz_t(), Int(2 * fact).get_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), degrees[i].get_mpz_t(), fact.get_mpz_t());
    windows[i] = Window{to_u64(lo + 1), to_u64(hi)};
  }

  auto& sieve = SieveCache::instance();
  PrimeDegreeSelection sel;
  sel.e = e;
  sel.input_degrees = degrees;
  sel.primes.assign(count, Int(0));
  sel.adjusted.assign(count, Int(0));

  std::set<std::uint64_t> used;
  bool greedy_ok = true;
  for (std::size_t step = 0; step < count; ++step) {
    const std::size_t i = count - 1 - step;  // reverse order
    const std::uint64_t pick =
        sieve.largest_prime_in(windows[i].lo, windows[i].hi, used);
    if (pick == 0) {
      greedy_ok = false;
      break;
    }
    used.insert(pick);
    sel.primes[i] = Int(static_cast<unsigned long>(pick));
  }

  if (!greedy_ok) {
    std::vector<std::vector<std::uint64_t>> candidates(count);
    for (std::size_t i = 0; i < count; ++i) {
      auto ps = sieve.primes_in(windows[i].lo, windows[i].hi);
      std::sort(ps.rbegin(), ps.rend());
      candidates[i] = std::move(ps);
    }
    std::set<std::uint64_t> taken;
    std::vector<std::uint64_t> chosen(count, 0);
    if (!match_windows(candidates, 0, taken, chosen)) {
      throw hypothesis_error("exhausted",
                             "no assignment of distinct primes to the degree "
                             "windows exists");
    }
    for (std::size_t i = 0; i < count; ++i) {
      sel.primes[i] = Int(static_cast<unsigned long>(chosen[i]));
    }
    sel.fallback_used = true;
  }

  for (std::size_t i = 0; i < count; ++i) {
    sel.adjusted[i] = fact * sel.primes[i];
    // d_i/2 < a_i <= d_i by the window construction; keep it checked.
    if (!(2 * sel.adjusted[i] > degrees[i] && sel.adjusted[i] <= degrees[i])) {
      throw std::logic_error("select_prime_degrees: window invariant broken");
    }
  }
  return sel;
}

Int min_curve_degree(std::int64_t n, std::int64_t f,
                     const std::vector<Int>& qs) {
  if (n < 1 || f < 1) {
    throw std::invalid_argument("min_curve_degree: need n >= 1 and f >= 1");
  }
  if (qs.size() != static_cast<std::size_t>(f)) {
    throw std::invalid_argument("min_curve_degree: need exactly f factors");
  }
  const Int threshold = pow_int(2, static_cast<std::uint64_t>(n + f - 1));
  for (const Int& q : qs) {
    if (q <= threshold) {
      throw hypothesis_error("factor-size",
                             "q = " + to_string(q) + " is not above 2^(n+f-1) = " +
                                 to_string(threshold));
    }
  }
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      Int g;
      mpz_gcd(g.get_mpz_t(), qs[i].get_mpz_t(), qs[j].get_mpz_t());
      if (g != 1) {
        throw hypothesis_error("coprimality",
                               "gcd(" + to_string(qs[i]) + ", " +
                                   to_string(qs[j]) + ") = " + to_string(g));
      }
    }
  }
  const Int prod = product(qs);
  const Int fact = factorial(Int(n + f - 2));
  Int g;
  mpz_gcd(g.get_mpz_t(), prod.get_mpz_t(), fact.get_mpz_t());
  return prod / g;
}

}  // namespace covgon
