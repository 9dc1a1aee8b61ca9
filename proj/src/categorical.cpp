#include "binrej/categorical.hpp"

#include "binrej/errors.hpp"

namespace binrej {

std::int64_t exact_fallback_sample(std::span<const std::uint64_t> weights, UniformSource& src) {
  std::uint64_t total = 0;
  for (std::uint64_t w : weights) {
    if (w > UniformSource::kMaxBound - total) throw ContractViolation("exact_fallback_sample: weight sum overflows");
    total += w;
  }
  if (total == 0) throw ContractViolation("exact_fallback_sample: empty or all-zero weight table");
  std::uint64_t r = src.random(total);
  for (std::size_t m = 0; m < weights.size(); ++m) {
    if (r < weights[m]) return static_cast<std::int64_t>(m);
    r -= weights[m];
  }
  throw InvariantFailure("exact_fallback_sample: scan fell off the table");
}

}  // namespace binrej
