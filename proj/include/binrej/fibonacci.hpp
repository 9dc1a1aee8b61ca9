#pragma once

// Words over {a, b} of weight n = #a + 2 #b, drawn uniformly.
//
// With m letters b there are F_n(m) = C(n-m, m) such words. The number m is
// chosen by rejection from bin(M), then the letters are shuffled.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binrej/rejection.hpp"
#include "binrej/rng.hpp"

namespace binrej::fibonacci {

inline constexpr std::int64_t kMaxSize = std::int64_t{1} << 30;

/// f(x) = (n-2x)(n-1-2x) - (x+1)(n-x); F_n(x+1) > F_n(x) iff f(x) > 0.
std::int64_t ratio_sign(std::int64_t n, std::int64_t x);

/// g(x) = (n-2x)(n-2x-1) - (2M-x)(n-x); the sign polynomial of the
/// majorant-to-target ratio away from M.
std::int64_t majorant_gap(std::int64_t n, std::int64_t mode, std::int64_t x);

/// ceil((5n - 3 - sqrt(5n^2 + 10n + 9)) / 10), computed without floating point.
std::int64_t closed_form_mode(std::int64_t n);

/// First m maximising C(n-m, m): a local integer scan around closed_form_mode.
std::int64_t mode(std::int64_t n);

/// Same value by a plain scan from 0; reference for tests.
std::int64_t mode_by_scan(std::int64_t n);

/// Acceptance chain against bin(M). Requires n >= 3.
class Oracle {
 public:
  explicit Oracle(std::int64_t n);

  std::int64_t size() const { return n_; }
  std::int64_t mode() const { return mode_; }
  std::int64_t support_max() const { return 2 * mode_; }
  std::int64_t domain_max() const { return n_ / 2; }

  StepTest below(std::int64_t i) const;
  StepTest above(std::int64_t i) const;

 private:
  std::int64_t n_;
  std::int64_t mode_;
};

class Sampler {
 public:
  explicit Sampler(std::int64_t n);

  std::int64_t size() const { return n_; }
  std::int64_t mode() const { return mode_; }
  bool uses_fallback() const { return n_ < 3; }

  /// Number of letters b, distributed as C(n-m, m) / F_n.
  std::int64_t choose_m(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options = {}) const;
  std::string sample(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options = {}) const;
  std::string sample(UniformSource& src) const;

 private:
  std::int64_t n_;
  std::int64_t mode_;
  std::optional<Oracle> oracle_;
  std::vector<std::uint64_t> fallback_weights_;
};

/// Uniform arrangement of a letters a and b letters b.
std::string shuffle_letters(std::int64_t a, std::int64_t b, UniformSource& src);

std::string sample(std::int64_t n, UniformSource& src);

/// #a + 2 #b == n and only letters a, b.
bool is_valid_word(const std::string& word, std::int64_t n);

}  // namespace binrej::fibonacci
