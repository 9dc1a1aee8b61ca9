#include "binrej/schroder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binrej/categorical.hpp"
#include "binrej/errors.hpp"
#include "binrej/wide_int.hpp"
#include "binrej/proposers.hpp"

namespace binrej::schroder {

namespace {

void check_size(std::int64_t n) {
  if (n < 0 || n > kMaxSize) {
    throw ContractViolation("schroder: size must be in [0, 2^30], got " + std::to_string(n));
  }
}

}  // namespace

std::int64_t ratio_sign(std::int64_t n, std::int64_t x) { return (n - x) * (n + 1 + x) - (x + 1) * (x + 2); }

std::int64_t majorant_gap(std::int64_t n, std::int64_t mode, std::int64_t x) {
  return (n - x) * (n + 1 + x) - (2 * mode - x) * (x + 2);
}

std::int64_t closed_form_mode(std::int64_t n) {
  check_size(n);
  using i128 = int128;
  const i128 disc = i128{2} * n * n + i128{2} * n;
  // c >= m~  <=>  2(c+1) >= sqrt(disc)
  const auto at_least = [&](i128 c) { return c + 1 >= 0 && 4 * (c + 1) * (c + 1) >= disc; };
  auto c = static_cast<i128>(std::ceil(-1.0 + std::sqrt(static_cast<double>(disc)) / 2.0));
  while (at_least(c - 1)) --c;
  while (!at_least(c)) ++c;
  return static_cast<std::int64_t>(c);
}

std::int64_t mode(std::int64_t n) {
  check_size(n);
  std::int64_t m = std::clamp<std::int64_t>(closed_form_mode(n), 0, n);
  while (m > 0 && ratio_sign(n, m - 1) <= 0) --m;
  while (m < n && ratio_sign(n, m) > 0) ++m;
  return m;
}

std::int64_t mode_by_scan(std::int64_t n) {
  check_size(n);
  for (std::int64_t m = 0; m < n; ++m) {
    if (ratio_sign(n, m) <= 0) return m;
  }
  return n;
}

Oracle::Oracle(std::int64_t n) : n_(n), mode_(0) {
  check_size(n);
  if (n < 2) throw ContractViolation("schroder::Oracle requires n >= 2");
  mode_ = schroder::mode(n);
}

// Below M: (i+2)(2M-i-[i=M-1]) / ((n+i+1)(n-i)).
StepTest Oracle::below(std::int64_t i) const {
  const std::int64_t m2 = 2 * mode_ - i - (i == mode_ - 1 ? 1 : 0);
  return StepTest::single((n_ + i + 1) * (n_ - i), (i + 2) * m2);
}

// At or above M: (n+i+1)(n-i) / ((i+2)(2M-i+[i=M])).
StepTest Oracle::above(std::int64_t i) const {
  const std::int64_t m2 = 2 * mode_ - i + (i == mode_ ? 1 : 0);
  return StepTest::single((i + 2) * m2, (n_ + i + 1) * (n_ - i));
}

Sampler::Sampler(std::int64_t n) : n_(n), mode_(schroder::mode(n)) {
  if (uses_fallback()) {
    fallback_weights_ = n == 1 ? std::vector<std::uint64_t>{1, 1} : std::vector<std::uint64_t>{1};
  } else {
    oracle_.emplace(n);
  }
}

std::int64_t Sampler::choose_m(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options) const {
  src.set_watermark(static_cast<std::uint64_t>(n_));
  if (uses_fallback()) {
    ++stats.outer_loops;
    return exact_fallback_sample(fallback_weights_, src);
  }
  const std::int64_t m = mode_;
  return binrej::choose_m(
      *oracle_, [m](UniformSource& s, GeneratorStats& st) { return bin(m, s, st); }, src, stats, options);
}

LatticeWord Sampler::sample(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options) const {
  const std::int64_t m = choose_m(src, stats, options);
  const LatticeWord word = shuffle_multiset({m + 1, m, n_ - m}, src);
  LatticeWord path = cycle_to_factor(word, src);
  ++stats.objects;
  stats.absorb_source(src);
  return path;
}

LatticeWord Sampler::sample(UniformSource& src) const {
  GeneratorStats stats;
  return sample(src, stats);
}

LatticeWord sample(std::int64_t n, UniformSource& src) { return Sampler(n).sample(src); }

bool is_valid_path(const LatticeWord& path, std::int64_t n) {
  const StepCounts& c = path.counts();
  return validate_factor(path, 0) && c.up + c.down + 2 * c.flat == 2 * n;
}

}  // namespace binrej::schroder
