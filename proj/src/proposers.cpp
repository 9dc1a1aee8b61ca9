#include "binrej/proposers.hpp"

#include <string>

#include "binrej/errors.hpp"
#include "binrej/wide_int.hpp"

namespace binrej {

Which select_which(std::int64_t mode, std::int64_t k, std::int64_t alpha) {
  using i128 = int128;
  const i128 km = static_cast<i128>(k) * mode + alpha;
  const i128 lhs = (km + 1) * km;
  const i128 rhs = static_cast<i128>(k) * k * mode * (mode + 1);
  return lhs >= rhs ? Which::AtPlus1 : Which::AtMinus1;
}

void check_params(const ExtendedBinomialParams& p) {
  if (p.mode < 1 || p.k < 1 || p.alpha < 0 || p.alpha > p.k - 1) {
    throw ContractViolation("extended_bin requires M >= 1, k >= 1, 0 <= alpha <= k-1 (M=" +
                            std::to_string(p.mode) + ", k=" + std::to_string(p.k) +
                            ", alpha=" + std::to_string(p.alpha) + ")");
  }
}

ExtendedBinomialParams ExtendedBinomialParams::make(std::int64_t mode, std::int64_t k, std::int64_t alpha) {
  ExtendedBinomialParams p{mode, k, alpha, Which::AtPlus1};
  check_params(p);
  p.which = select_which(mode, k, alpha);
  return p;
}

std::int64_t basic(std::int64_t k, UniformSource& src) {
  if (k < 0) throw ContractViolation("basic(k) requires k >= 0");
  return static_cast<std::int64_t>(src.random(static_cast<std::uint64_t>(k) + 1));
}

std::int64_t bin(std::int64_t mode, UniformSource& src, GeneratorStats& stats) {
  if (mode < 1) {
    throw ContractViolation("bin(M) requires M >= 1, got M=" + std::to_string(mode));
  }
  const std::int64_t flips = 2 * mode;
  for (;;) {
    std::int64_t m = 0;
    for (std::int64_t i = 0; i < flips; ++i) {
      if (src.random(2) == 0) ++m;
    }
    if (m == mode && src.random(static_cast<std::uint64_t>(mode) + 1) == 0) {
      ++stats.proposer_retries;
      continue;
    }
    return m;
  }
}

std::int64_t bin(std::int64_t mode, UniformSource& src) {
  GeneratorStats scratch;
  return bin(mode, src, scratch);
}

std::int64_t extended_bin(const ExtendedBinomialParams& p, UniformSource& src, GeneratorStats& stats) {
  check_params(p);
  const std::int64_t draws = p.trials();
  const auto faces = static_cast<std::uint64_t>(p.k) + 1;
  const std::int64_t km = p.k * p.mode;
  for (;;) {
    std::int64_t m = 0;
    for (std::int64_t i = 0; i < draws; ++i) {
      if (src.random(faces) == 0) ++m;
    }
    if (m != p.mode) return m;
    // Lower the weight at M to that of M+1 or M-1.
    const bool reject =
        p.which == Which::AtPlus1
            ? src.random(static_cast<std::uint64_t>(p.k * (p.mode + 1))) >= static_cast<std::uint64_t>(km + p.alpha)
            : src.random(static_cast<std::uint64_t>(km + p.alpha + 1)) >= static_cast<std::uint64_t>(km);
    if (reject) {
      ++stats.proposer_retries;
      continue;
    }
    return m;
  }
}

std::int64_t extended_bin(const ExtendedBinomialParams& p, UniformSource& src) {
  GeneratorStats scratch;
  return extended_bin(p, src, scratch);
}

}  // namespace binrej
