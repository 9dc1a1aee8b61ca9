#include "binrej/motzkin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binrej/errors.hpp"
#include "binrej/wide_int.hpp"

namespace binrej::motzkin {

namespace {

using i128 = int128;

void check_args(std::int64_t n, std::int64_t h) {
  if (n < 0 || n > kMaxSize) {
    throw ContractViolation("motzkin: size must be in [0, 2^20], got " + std::to_string(n));
  }
  if (h < 1 || h > n + 1) {
    throw ContractViolation("motzkin: h = h'+1 must be in [1, n+1], got h=" + std::to_string(h) +
                            " for n=" + std::to_string(n));
  }
}

// 4n^2 + 20n + 28 - 3h^2, positive for 1 <= h <= n+1.
i128 discriminant(std::int64_t n, std::int64_t h) {
  return i128{4} * n * n + i128{20} * n + 28 - i128{3} * h * h;
}

// 6 m~ = 4n + 4 - 3h - sqrt(D)
i128 linear_part(std::int64_t n, std::int64_t h) { return i128{4} * n + 4 - i128{3} * h; }

long double approx_mtilde(std::int64_t n, std::int64_t h) {
  return (static_cast<long double>(linear_part(n, h)) - std::sqrt(static_cast<long double>(discriminant(n, h)))) / 6.0L;
}

// value <= sqrt(disc) with value possibly negative
bool at_most_sqrt(i128 value, i128 disc) { return value <= 0 || value * value <= disc; }

}  // namespace

std::int64_t ratio_sign(std::int64_t n, std::int64_t h, std::int64_t x) {
  return (n - h - 2 * x) * (n + 1 - h - 2 * x) - (x + 1) * (x + 1 + h);
}

std::int64_t domain_max(std::int64_t n, std::int64_t h) {
  check_args(n, h);
  return (n + 1 - h) / 2;
}

std::int64_t closed_form_mode(std::int64_t n, std::int64_t h) {
  check_args(n, h);
  const i128 disc = discriminant(n, h);
  const i128 lin = linear_part(n, h);
  // c >= m~  <=>  sqrt(D) >= lin - 6c
  const auto at_least = [&](i128 c) { return at_most_sqrt(lin - 6 * c, disc); };
  auto c = static_cast<i128>(std::ceil(approx_mtilde(n, h)));
  while (at_least(c - 1)) --c;
  while (!at_least(c)) ++c;
  return static_cast<std::int64_t>(c);
}

std::int64_t mode(std::int64_t n, std::int64_t h) {
  const std::int64_t top = domain_max(n, h);
  std::int64_t m = std::clamp<std::int64_t>(closed_form_mode(n, h), 0, top);
  while (m > 0 && ratio_sign(n, h, m - 1) <= 0) --m;
  while (m < top && ratio_sign(n, h, m) > 0) ++m;
  return m;
}

std::int64_t mode_by_scan(std::int64_t n, std::int64_t h) {
  const std::int64_t top = domain_max(n, h);
  for (std::int64_t m = 0; m < top; ++m) {
    if (ratio_sign(n, h, m) <= 0) return m;
  }
  return top;
}

std::int64_t minimal_k(std::int64_t n, std::int64_t h) {
  check_args(n, h);
  const i128 disc = discriminant(n, h);
  const i128 lin = linear_part(n, h);
  const i128 u = n + 1 - h;
  if (!(lin > 0 && lin * lin > disc)) throw ContractViolation("minimal_k requires m~ > 0");
  // c m~ >= u/2  <=>  c lin - 3u >= c sqrt(D)
  const auto covers = [&](i128 c) {
    const i128 lhs = c * lin - 3 * u;
    return lhs >= 0 && lhs * lhs >= c * c * disc;
  };
  const long double mt = approx_mtilde(n, h);
  i128 c = std::max<i128>(2, static_cast<i128>(std::ceil(static_cast<long double>(u) / (2.0L * mt))));
  while (c > 2 && covers(c - 1)) --c;
  while (!covers(c)) ++c;
  return static_cast<std::int64_t>(c - 1);
}

std::int64_t alpha_candidate(std::int64_t n, std::int64_t h, std::int64_t mode, std::int64_t k) {
  check_args(n, h);
  if (k < 1) throw ContractViolation("alpha_candidate requires k >= 1");
  const i128 disc = discriminant(n, h);
  const i128 lin = linear_part(n, h);
  // a <= k - k(M - m~)  <=>  k sqrt(D) <= k lin - 6a + 6k - 6kM
  const auto fits = [&](i128 a) {
    const i128 rhs = i128{k} * lin - 6 * a + 6 * i128{k} - 6 * i128{k} * mode;
    return rhs >= 0 && rhs * rhs >= i128{k} * k * disc;
  };
  const long double approx = static_cast<long double>(k) - static_cast<long double>(k) * (static_cast<long double>(mode) - approx_mtilde(n, h));
  auto a = std::clamp<i128>(static_cast<i128>(std::floor(approx)), 0, k);
  while (a < k && fits(a + 1)) ++a;
  while (a > 0 && !fits(a)) --a;
  return static_cast<std::int64_t>(std::min<i128>(a, k - 1));
}

ExtendedOracle::ExtendedOracle(std::int64_t n, std::int64_t h, const ExtendedBinomialParams& params)
    : n_(n), h_(h), domain_max_(motzkin::domain_max(n, h)), params_(params) {
  check_params(params);
  if (params.trials() < domain_max_) {
    throw ContractViolation("ExtendedOracle: proposal support does not cover the domain");
  }
}

// u = n+1-h; generic below step (i <= M-2) is (i+1+h)(N-i) / (k(u-2i)(u-1-2i)).
StepTest ExtendedOracle::below(std::int64_t i) const {
  const std::int64_t u = n_ + 1 - h_;
  const std::int64_t k = params_.k;
  const std::int64_t big_m = params_.mode;
  const std::int64_t km = k * big_m + params_.alpha;
  if (i == big_m - 1) {
    const std::int64_t a = u - 2 * i;  // n+3-h-2M
    if (params_.which == Which::AtPlus1) {
      return StepTest::pair({k * (big_m + 1), km + 1, 1}, {k * a * (a - 1), (big_m + h_) * km, 1});
    }
    return StepTest::single(a * (a - 1), big_m * (big_m + h_));
  }
  return StepTest::single(k * (u - 2 * i) * (u - 1 - 2 * i), (i + 1 + h_) * (params_.trials() - i));
}

// Generic above step (i >= M+1) is k(u-2i)(u-1-2i) / ((i+1+h)(N-i)).
StepTest ExtendedOracle::above(std::int64_t i) const {
  const std::int64_t u = n_ + 1 - h_;
  const std::int64_t k = params_.k;
  const std::int64_t big_m = params_.mode;
  const std::int64_t km = k * big_m + params_.alpha;
  if (i == big_m) {
    const std::int64_t a = u - 2 * big_m;  // n+1-h-2M
    if (params_.which == Which::AtMinus1) {
      return StepTest::pair({km, k * big_m, 1}, {(big_m + h_ + 1) * (km + 1), k * a * (a - 1), 1});
    }
    return StepTest::single((big_m + 1) * (big_m + 1 + h_), a * (a - 1));
  }
  return StepTest::single((i + 1 + h_) * (params_.trials() - i), k * (u - 2 * i) * (u - 1 - 2 * i));
}

BasicOracle::BasicOracle(std::int64_t n, std::int64_t h, std::int64_t mode)
    : n_(n), h_(h), mode_(mode), domain_max_(motzkin::domain_max(n, h)) {}

StepTest BasicOracle::below(std::int64_t i) const {
  const std::int64_t u = n_ + 1 - h_;
  return StepTest::single((u - 2 * i) * (u - 1 - 2 * i), (i + 1) * (i + 1 + h_));
}

StepTest BasicOracle::above(std::int64_t i) const {
  const std::int64_t u = n_ + 1 - h_;
  return StepTest::scaled(i + 1 + h_, i + 1, (u - 2 * i) * (u - 1 - 2 * i));
}

bool locally_valid(const ExtendedOracle& oracle) {
  const std::int64_t big_m = oracle.mode();
  const std::int64_t last = std::min(oracle.domain_max(), oracle.support_max()) - 1;
  const auto within = [](const StepTest& s) {
    return std::all_of(s.begin(), s.end(), [](const RatioTest& t) { return t.threshold <= t.trials * t.scale; });
  };
  const auto strict = [](const StepTest& s) {
    return std::any_of(s.begin(), s.end(), [](const RatioTest& t) { return t.threshold < t.trials * t.scale; });
  };
  for (std::int64_t i = std::max<std::int64_t>(0, big_m - 2); i <= big_m - 1; ++i) {
    const StepTest s = oracle.below(i);
    if (!within(s) || !strict(s)) return false;
  }
  for (std::int64_t i = big_m; i <= std::min(big_m + 1, last); ++i) {
    if (!within(oracle.above(i))) return false;
  }
  return true;
}

Instance select_params(std::int64_t n, std::int64_t h) {
  check_args(n, h);
  Instance inst;
  inst.n = n;
  inst.h = h;
  inst.mode = mode(n, h);
  inst.domain_max = domain_max(n, h);
  inst.k_basic = inst.domain_max;
  if (inst.mode < 2) {
    inst.regime = Regime::Basic;
    return inst;
  }

  const std::int64_t k = minimal_k(n, h);
  if ((k + 1) * inst.mode < inst.domain_max) {
    throw InvariantFailure("select_params: (k+1)M does not cover the domain");
  }
  inst.alpha_candidate = alpha_candidate(n, h, inst.mode, k);

  const auto try_alpha = [&](std::int64_t alpha) {
    const auto params = ExtendedBinomialParams::make(inst.mode, k, alpha);
    return locally_valid(ExtendedOracle(n, h, params)) ? std::optional(params) : std::nullopt;
  };
  if (auto params = try_alpha(inst.alpha_candidate)) {
    inst.regime = Regime::Extended;
    inst.params = *params;
    inst.alpha_source = AlphaSource::Analytic;
    return inst;
  }
  for (std::int64_t alpha = 0; alpha < k; ++alpha) {
    if (auto params = try_alpha(alpha)) {
      inst.regime = Regime::Extended;
      inst.params = *params;
      inst.alpha_source = AlphaSource::Scanned;
      return inst;
    }
  }
  inst.regime = Regime::Basic;
  inst.alpha_source = AlphaSource::None;
  return inst;
}

Sampler::Sampler(std::int64_t n, std::int64_t final_height) {
  if (final_height < 0 || final_height > n) {
    throw ContractViolation("motzkin: final height must be in [0, n], got " + std::to_string(final_height));
  }
  instance_ = select_params(n, final_height + 1);
  if (instance_.regime == Regime::Extended) {
    extended_.emplace(n, instance_.h, instance_.params);
  } else {
    basic_.emplace(n, instance_.h, instance_.mode);
  }
}

std::int64_t Sampler::choose_m(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options) const {
  src.set_watermark(static_cast<std::uint64_t>(instance_.n));
  if (extended_) {
    const ExtendedBinomialParams params = instance_.params;
    return binrej::choose_m(
        *extended_, [params](UniformSource& s, GeneratorStats& st) { return extended_bin(params, s, st); }, src,
        stats, options);
  }
  const std::int64_t range = instance_.k_basic;
  return binrej::choose_m(
      *basic_, [range](UniformSource& s, GeneratorStats&) { return basic(range, s); }, src, stats, options);
}

LatticeWord Sampler::sample(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options) const {
  const std::int64_t m = choose_m(src, stats, options);
  const std::int64_t h = instance_.h;
  const LatticeWord word = shuffle_multiset({m + h, m, instance_.n + 1 - h - 2 * m}, src);
  LatticeWord factor = cycle_to_factor(word, src);
  ++stats.objects;
  stats.absorb_source(src);
  return factor;
}

LatticeWord Sampler::sample(UniformSource& src) const {
  GeneratorStats stats;
  return sample(src, stats);
}

LatticeWord sample(std::int64_t n, std::int64_t final_height, UniformSource& src) {
  return Sampler(n, final_height).sample(src);
}

bool is_valid_factor(const LatticeWord& word, std::int64_t n, std::int64_t final_height) {
  return static_cast<std::int64_t>(word.size()) == n && validate_factor(word, final_height);
}

}  // namespace binrej::motzkin
