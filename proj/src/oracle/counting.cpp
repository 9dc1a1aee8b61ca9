#include "binrej/oracle/counting.hpp"

#include <algorithm>
#include <string>

#include "binrej/errors.hpp"

namespace binrej::oracle {

namespace {

void check_bound(std::int64_t n, const char* what) {
  if (n < 0 || n > kCountBound) {
    throw ContractViolation(std::string(what) + ": size outside [0, " + std::to_string(kCountBound) + "]");
  }
}


}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

BigInt multinomial(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 0 || b < 0 || c < 0) return 0;
  return binomial(a + b + c, a) * binomial(b + c, b);
}

CountTable count_fibonacci(std::int64_t n) {
  check_bound(n, "count_fibonacci");
  CountTable t;
  for (std::int64_t m = 0; 2 * m <= n; ++m) {
    t.per_m.push_back(binomial(n - m, m));
    t.total += t.per_m.back();
  }
  return t;
}

CountTable count_schroder(std::int64_t n) {
  check_bound(n, "count_schroder");
  CountTable t;
  for (std::int64_t m = 0; m <= n; ++m) {
    const BigInt words = multinomial(m, m + 1, n - m);
    if (words % (n + m + 1) != 0) throw InvariantFailure("count_schroder: cycle-lemma division is not exact");
    t.per_m.push_back(words / (n + m + 1));
    t.total += t.per_m.back();
  }
  return t;
}

CountTable count_motzkin(std::int64_t n, std::int64_t h) {
  check_bound(n, "count_motzkin");
  if (h < 1 || h > n + 1) throw ContractViolation("count_motzkin: h must be in [1, n+1]");
  CountTable t;
  for (std::int64_t m = 0; 2 * m <= n + 1 - h; ++m) {
    const BigInt words = multinomial(m, m + h, n + 1 - h - 2 * m) * h;
    if (words % (n + 1) != 0) throw InvariantFailure("count_motzkin: cycle-lemma division is not exact");
    t.per_m.push_back(words / (n + 1));
    t.total += t.per_m.back();
  }
  return t;
}

BigInt fibonacci_by_recurrence(std::int64_t n) {
  check_bound(n, "fibonacci_by_recurrence");
  BigInt prev = 1;
  BigInt cur = 1;
  for (std::int64_t i = 2; i <= n; ++i) {
    BigInt next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt schroder_by_recurrence(std::int64_t n) {
  check_bound(n, "schroder_by_recurrence");
  std::vector<BigInt> s{1, 2};
  for (std::int64_t i = 2; i <= n; ++i) {
    BigInt v = 3 * s[static_cast<std::size_t>(i - 1)];
    for (std::int64_t k = 1; k <= i - 2; ++k) v += s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(i - k - 1)];
    s.push_back(std::move(v));
  }
  return s[static_cast<std::size_t>(n)];
}

BigInt motzkin_by_height_dp(std::int64_t n, std::int64_t final_height) {
  check_bound(n, "motzkin_by_height_dp");
  if (final_height < 0 || final_height > n) return 0;
  std::vector<BigInt> ways(static_cast<std::size_t>(n + 2), 0);
  ways[0] = 1;
  for (std::int64_t step = 0; step < n; ++step) {
    std::vector<BigInt> next(ways.size(), 0);
    for (std::size_t y = 0; y + 1 < ways.size(); ++y) {
      if (ways[y] == 0) continue;
      next[y] += ways[y];
      next[y + 1] += ways[y];
      if (y > 0) next[y - 1] += ways[y];
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(final_height)];
}

BigInt schroder_by_dyck_subsequence(std::int64_t n, std::int64_t m) {
  if (m < 0 || m > n) return 0;
  const BigInt catalan = binomial(2 * m, m) / (m + 1);
  return binomial(n + m, 2 * m) * catalan;
}

BigInt motzkin_by_ballot(std::int64_t n, std::int64_t h, std::int64_t m) {
  const std::int64_t ups = m + h - 1;
  const std::int64_t flats = n + 1 - h - 2 * m;
  if (m < 0 || flats < 0) return 0;
  const BigInt ballot = binomial(ups + m, m) - binomial(ups + m, m - 1);
  return binomial(n, flats) * ballot;
}

std::vector<BigInt> bin_weights(std::int64_t mode) {
  std::vector<BigInt> w;
  for (std::int64_t m = 0; m <= 2 * mode; ++m) w.push_back(binomial(2 * mode, m));
  w[static_cast<std::size_t>(mode)] = binomial(2 * mode, mode + 1);
  return w;
}

std::vector<BigInt> extended_bin_weights(std::int64_t mode, std::int64_t k, std::int64_t alpha) {
  const std::int64_t trials = (k + 1) * mode + alpha;
  std::vector<BigInt> w;
  for (std::int64_t m = 0; m <= trials; ++m) w.push_back(boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(trials - m)) * binomial(trials, m));
  const auto at = static_cast<std::size_t>(mode);
  w[at] = std::max(w[at - 1], w[at + 1]);
  return w;
}

}  // namespace binrej::oracle
