#include "binrej/fibonacci.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binrej/categorical.hpp"
#include "binrej/errors.hpp"
#include "binrej/wide_int.hpp"
#include "binrej/proposers.hpp"

namespace binrej::fibonacci {

namespace {

void check_size(std::int64_t n) {
  if (n < 0 || n > kMaxSize) {
    throw ContractViolation("fibonacci: size must be in [0, 2^30], got " + std::to_string(n));
  }
}

}  // namespace

std::int64_t ratio_sign(std::int64_t n, std::int64_t x) {
  return (n - 2 * x) * (n - 1 - 2 * x) - (x + 1) * (n - x);
}

std::int64_t majorant_gap(std::int64_t n, std::int64_t mode, std::int64_t x) {
  return (n - 2 * x) * (n - 2 * x - 1) - (2 * mode - x) * (n - x);
}

std::int64_t closed_form_mode(std::int64_t n) {
  check_size(n);
  using i128 = int128;
  const i128 disc = i128{5} * n * n + i128{10} * n + 9;
  // c >= m~  <=>  sqrt(disc) >= 5n - 3 - 10c
  const auto at_least = [&](i128 c) {
    const i128 r = i128{5} * n - 3 - 10 * c;
    return r <= 0 || r * r <= disc;
  };
  const double approx = (5.0 * static_cast<double>(n) - 3.0 - std::sqrt(static_cast<double>(disc))) / 10.0;
  auto c = static_cast<i128>(std::ceil(approx));
  while (at_least(c - 1)) --c;
  while (!at_least(c)) ++c;
  return static_cast<std::int64_t>(c);
}

std::int64_t mode(std::int64_t n) {
  check_size(n);
  const std::int64_t top = n / 2;
  std::int64_t m = std::clamp<std::int64_t>(closed_form_mode(n), 0, top);
  while (m > 0 && ratio_sign(n, m - 1) <= 0) --m;
  while (m < top && ratio_sign(n, m) > 0) ++m;
  return m;
}

std::int64_t mode_by_scan(std::int64_t n) {
  check_size(n);
  const std::int64_t top = n / 2;
  for (std::int64_t m = 0; m < top; ++m) {
    if (ratio_sign(n, m) <= 0) return m;
  }
  return top;
}

Oracle::Oracle(std::int64_t n) : n_(n), mode_(0) {
  check_size(n);
  if (n < 3) throw ContractViolation("fibonacci::Oracle requires n >= 3");
  mode_ = fibonacci::mode(n);
}

// Below M: RB̄(i)/RF(i) = (n-i)(2M-i-[i=M-1]) / ((n-2i)(n-2i-1)).
StepTest Oracle::below(std::int64_t i) const {
  const std::int64_t n = n_;
  const std::int64_t m2 = 2 * mode_ - i - (i == mode_ - 1 ? 1 : 0);
  return StepTest::single((n - 2 * i) * (n - 2 * i - 1), (n - i) * m2);
}

// At or above M: RF(i)/RB̄(i) = (n-2i)(n-2i-1) / ((n-i)(2M-i+[i=M])).
StepTest Oracle::above(std::int64_t i) const {
  const std::int64_t n = n_;
  const std::int64_t m2 = 2 * mode_ - i + (i == mode_ ? 1 : 0);
  return StepTest::single((n - i) * m2, (n - 2 * i) * (n - 2 * i - 1));
}

Sampler::Sampler(std::int64_t n) : n_(n), mode_(fibonacci::mode(n)) {
  if (uses_fallback()) {
    // C(n-m, m) for n < 3.
    fallback_weights_ = n == 2 ? std::vector<std::uint64_t>{1, 1} : std::vector<std::uint64_t>{1};
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

std::string Sampler::sample(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options) const {
  const std::int64_t b = choose_m(src, stats, options);
  std::string word = shuffle_letters(n_ - 2 * b, b, src);
  ++stats.objects;
  stats.absorb_source(src);
  return word;
}

std::string Sampler::sample(UniformSource& src) const {
  GeneratorStats stats;
  return sample(src, stats);
}

std::string shuffle_letters(std::int64_t a, std::int64_t b, UniformSource& src) {
  if (a < 0 || b < 0) throw ContractViolation("shuffle_letters: negative letter count");
  std::string word;
  word.reserve(static_cast<std::size_t>(a + b));
  while (a + b > 0) {
    if (static_cast<std::int64_t>(src.random(static_cast<std::uint64_t>(a + b))) < a) {
      word.push_back('a');
      --a;
    } else {
      word.push_back('b');
      --b;
    }
  }
  return word;
}

std::string sample(std::int64_t n, UniformSource& src) { return Sampler(n).sample(src); }

bool is_valid_word(const std::string& word, std::int64_t n) {
  std::int64_t weight = 0;
  for (char c : word) {
    if (c == 'a') {
      weight += 1;
    } else if (c == 'b') {
      weight += 2;
    } else {
      return false;
    }
  }
  return weight == n;
}

}  // namespace binrej::fibonacci
