#include "binrej/rng.hpp"

#include <string>

#include "binrej/errors.hpp"
#include "binrej/wide_int.hpp"

namespace binrej {

UniformSource::UniformSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t UniformSource::random(std::uint64_t k) {
  if (k == 0 || k > kMaxBound) {
    throw ContractViolation("random(k) requires 1 <= k <= 2^62, got k=" + std::to_string(k));
  }
  ++calls_;
  if (k > max_request_) max_request_ = k;
  if (k > watermark_) ++large_ops_;

  using u128 = uint128;
  std::uint64_t x = engine_();
  u128 product = static_cast<u128>(x) * k;
  auto low = static_cast<std::uint64_t>(product);
  if (low < k) {
    const std::uint64_t threshold = (0 - k) % k;
    while (low < threshold) {
      x = engine_();
      product = static_cast<u128>(x) * k;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

std::uint64_t UniformSource::random_halves(std::uint64_t k) {
  if (k < 2) return random(k);
  const std::uint64_t half = k / 2 + k % 2;
  for (;;) {
    const std::uint64_t v = 2 * random(half) + random(2);
    if (v < k) return v;
  }
}

bool UniformSource::ratio_test(std::uint64_t p, std::uint64_t q) { return random(p) < q; }

}  // namespace binrej
