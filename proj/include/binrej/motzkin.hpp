#pragma once

// Motzkin left factors: n steps U = (1,1), D = (1,-1), F = (1,0), prefix
// heights >= 0, final height h' given. Internally h = h' + 1.
//
// A factor with m down-steps comes from a word with m+h U, m D and n+1-h-2m F
// through the cycle lemma, so F_n^h(m) = h/(n+1) multinomial(n+1; m, m+h, n+1-h-2m).
// When the first mode M of that law is at least 2 the number m is drawn by
// rejection from extended_bin; otherwise (h close to n) a uniform proposal on
// [0, floor((n+1-h)/2)] is used.

#include <cstdint>
#include <optional>
#include <string_view>

#include "binrej/proposers.hpp"
#include "binrej/rejection.hpp"
#include "binrej/rng.hpp"
#include "binrej/words.hpp"

namespace binrej::motzkin {

inline constexpr std::int64_t kMaxSize = std::int64_t{1} << 20;
inline constexpr std::string_view kAlphabet = "UDF";

enum class Regime { Extended, Basic };

enum class AlphaSource {
  Analytic,  // min(k-1, floor(k - k(M - m~))) passed the local check
  Scanned,   // the first alpha in [0, k-1] passing the local check
  None,      // no alpha passed; the instance fell back to the Basic regime
};

/// f(x) = (n-h-2x)(n+1-h-2x) - (x+1)(x+1+h); F(x+1) > F(x) iff f(x) > 0.
std::int64_t ratio_sign(std::int64_t n, std::int64_t h, std::int64_t x);

/// Largest m with F_n^h(m) > 0.
std::int64_t domain_max(std::int64_t n, std::int64_t h);

/// ceil(2(n+1)/3 - h/2 - sqrt(4n^2 + 20n + 28 - 3h^2) / 6), exact.
std::int64_t closed_form_mode(std::int64_t n, std::int64_t h);

std::int64_t mode(std::int64_t n, std::int64_t h);
std::int64_t mode_by_scan(std::int64_t n, std::int64_t h);

/// Smallest k >= 1 with (k+1) m~ >= (n+1-h)/2. Requires m~ > 0.
std::int64_t minimal_k(std::int64_t n, std::int64_t h);

/// min(k-1, floor(k - k(M - m~))): the alpha with m~ + (k-1-alpha)/k <= M <= m~ + (k-alpha)/k.
std::int64_t alpha_candidate(std::int64_t n, std::int64_t h, std::int64_t mode, std::int64_t k);

/// Acceptance chain against extended_bin.
class ExtendedOracle {
 public:
  ExtendedOracle(std::int64_t n, std::int64_t h, const ExtendedBinomialParams& params);

  std::int64_t mode() const { return params_.mode; }
  std::int64_t support_max() const { return params_.trials(); }
  std::int64_t domain_max() const { return domain_max_; }
  const ExtendedBinomialParams& params() const { return params_; }

  StepTest below(std::int64_t i) const;
  StepTest above(std::int64_t i) const;

 private:
  std::int64_t n_;
  std::int64_t h_;
  std::int64_t domain_max_;
  ExtendedBinomialParams params_;
};

/// Acceptance chain against basic(floor((n+1-h)/2)); the majorant is flat so
/// each step is the bare ratio F(i+1)/F(i) or its reciprocal.
class BasicOracle {
 public:
  BasicOracle(std::int64_t n, std::int64_t h, std::int64_t mode);

  std::int64_t mode() const { return mode_; }
  std::int64_t support_max() const { return domain_max_; }
  std::int64_t domain_max() const { return domain_max_; }

  StepTest below(std::int64_t i) const;
  /// Drawn in two digits so no operand exceeds max(n+1-h)(n-h), n+2).
  StepTest above(std::int64_t i) const;

 private:
  std::int64_t n_;
  std::int64_t h_;
  std::int64_t mode_;
  std::int64_t domain_max_;
};

/// Every step at i in {M-2, M-1} (below) and {M, M+1} (above) that can run has
/// each test's threshold <= trials, and each below step is strictly below one.
bool locally_valid(const ExtendedOracle& oracle);

struct Instance {
  std::int64_t n = 0;
  std::int64_t h = 1;
  std::int64_t mode = 0;
  std::int64_t domain_max = 0;
  Regime regime = Regime::Basic;
  ExtendedBinomialParams params{};  // meaningful in the Extended regime
  std::int64_t alpha_candidate = 0;
  AlphaSource alpha_source = AlphaSource::None;
  std::int64_t k_basic = 0;  // floor((n+1-h)/2), the Basic proposal range
};

/// Regime, k, alpha and which for (n, h), 1 <= h <= n+1.
Instance select_params(std::int64_t n, std::int64_t h);

class Sampler {
 public:
  /// final_height is h' in [0, n].
  Sampler(std::int64_t n, std::int64_t final_height);

  const Instance& instance() const { return instance_; }
  std::int64_t size() const { return instance_.n; }
  std::int64_t final_height() const { return instance_.h - 1; }

  /// Number of down-steps, distributed as F_n^h(m) / F_n^h.
  std::int64_t choose_m(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options = {}) const;
  LatticeWord sample(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options = {}) const;
  LatticeWord sample(UniformSource& src) const;

 private:
  Instance instance_;
  std::optional<ExtendedOracle> extended_;
  std::optional<BasicOracle> basic_;
};

LatticeWord sample(std::int64_t n, std::int64_t final_height, UniformSource& src);

bool is_valid_factor(const LatticeWord& word, std::int64_t n, std::int64_t final_height);

}  // namespace binrej::motzkin
