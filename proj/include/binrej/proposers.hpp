#pragma once

// Proposal samplers for the rejection loop.
//
//   basic(k)          uniform on [0, k]
//   bin(M)            C(2M, m), with the weight at M lowered to that of M + 1
//   extended_bin(p)   k^(N-m) C(N, m) with N = (k+1)M + alpha, the weight at M
//                     lowered to max(weight(M-1), weight(M+1))
//
// The lowered weight at M makes the majorant flat across M-1, M, M+1, which is
// what lets the acceptance chain stay below probability one on both sides.

#include <cstdint>

#include "binrej/rejection.hpp"
#include "binrej/rng.hpp"

namespace binrej {

enum class Which { AtPlus1, AtMinus1 };

struct ExtendedBinomialParams {
  std::int64_t mode = 1;   // M >= 1
  std::int64_t k = 1;      // k >= 1
  std::int64_t alpha = 0;  // 0 <= alpha <= k - 1
  Which which = Which::AtPlus1;

  /// Number of trials N = (k+1)M + alpha; also the largest value drawn.
  std::int64_t trials() const { return (k + 1) * mode + alpha; }

  /// Builds params with `which` chosen by (kM+a+1)(kM+a) >= k^2 M(M+1); ties go to AtPlus1.
  static ExtendedBinomialParams make(std::int64_t mode, std::int64_t k, std::int64_t alpha);
};

/// (kM+a+1)(kM+a) >= k^2 M(M+1): the weight at M+1 is at least the weight at M-1.
Which select_which(std::int64_t mode, std::int64_t k, std::int64_t alpha);

std::int64_t basic(std::int64_t k, UniformSource& src);

/// Throws ContractViolation for M < 1 (its only support point would never be accepted).
std::int64_t bin(std::int64_t mode, UniformSource& src, GeneratorStats& stats);
std::int64_t bin(std::int64_t mode, UniformSource& src);

std::int64_t extended_bin(const ExtendedBinomialParams& params, UniformSource& src, GeneratorStats& stats);
std::int64_t extended_bin(const ExtendedBinomialParams& params, UniformSource& src);

void check_params(const ExtendedBinomialParams& params);

}  // namespace binrej
