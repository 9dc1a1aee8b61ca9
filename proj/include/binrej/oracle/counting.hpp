#pragma once

// Exact counts and per-m tables for the three families.

#include <cstdint>
#include <vector>

#include "binrej/oracle/exact.hpp"

namespace binrej::oracle {

inline constexpr std::int64_t kCountBound = 4096;

struct CountTable {
  BigInt total;
  std::vector<BigInt> per_m;  // per_m[m] = F(m); sums to total
};

/// F_n(m) = C(n-m, m).
CountTable count_fibonacci(std::int64_t n);
/// F_n(m) = multinomial(n+m+1; m, m+1, n-m) / (n+m+1).
CountTable count_schroder(std::int64_t n);
/// F_n^h(m) = h/(n+1) multinomial(n+1; m, m+h, n+1-h-2m), with h = h'+1 in [1, n+1].
CountTable count_motzkin(std::int64_t n, std::int64_t h);

/// F_n = F_{n-1} + F_{n-2}, F_0 = F_1 = 1.
BigInt fibonacci_by_recurrence(std::int64_t n);
/// S_0 = 1, S_1 = 2, S_n = 3 S_{n-1} + sum_{k=1}^{n-2} S_k S_{n-k-1}.
BigInt schroder_by_recurrence(std::int64_t n);
/// Left factors of length n ending at final_height, by dynamic programming over heights.
BigInt motzkin_by_height_dp(std::int64_t n, std::int64_t final_height);

/// C(n+m, 2m) Catalan(m): Schröder paths with m up-steps, via the Dyck subsequence.
BigInt schroder_by_dyck_subsequence(std::int64_t n, std::int64_t m);
/// C(n, flats) times the ballot count of the Up/Down subsequence.
BigInt motzkin_by_ballot(std::int64_t n, std::int64_t h, std::int64_t m);

/// bin(M) weights: C(2M, m) with the weight at M replaced by C(2M, M+1).
std::vector<BigInt> bin_weights(std::int64_t mode);
/// extended_bin weights: k^(N-m) C(N, m) with the weight at M replaced by max of its neighbours.
std::vector<BigInt> extended_bin_weights(std::int64_t mode, std::int64_t k, std::int64_t alpha);

}  // namespace binrej::oracle
