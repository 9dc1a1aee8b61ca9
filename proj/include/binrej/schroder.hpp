#pragma once

// Schröder paths from (0,0) to (2n,0): steps U = (1,1), D = (1,-1) and a
// horizontal step H = (2,0), never below the axis, drawn uniformly.
//
// A path with m up-steps is obtained from a word with m+1 U, m D and n-m H by
// the cycle lemma, giving F_n(m) = multinomial(n+m+1; m, m+1, n-m) / (n+m+1).

#include <cstdint>
#include <optional>
#include <vector>

#include "binrej/rejection.hpp"
#include "binrej/rng.hpp"
#include "binrej/words.hpp"

namespace binrej::schroder {

inline constexpr std::int64_t kMaxSize = std::int64_t{1} << 30;
inline constexpr std::string_view kAlphabet = "UDH";

/// f(x) = (n-x)(n+1+x) - (x+1)(x+2).
std::int64_t ratio_sign(std::int64_t n, std::int64_t x);

/// g(x) = (n-x)(n+1+x) - (2M-x)(x+2).
std::int64_t majorant_gap(std::int64_t n, std::int64_t mode, std::int64_t x);

/// ceil(-1 + sqrt(2n^2 + 2n) / 2), exact. Equals -1 at n = 0.
std::int64_t closed_form_mode(std::int64_t n);

/// First m in [0, n] maximising F_n(m).
std::int64_t mode(std::int64_t n);
std::int64_t mode_by_scan(std::int64_t n);

/// Acceptance chain against bin(M). Requires n >= 2.
class Oracle {
 public:
  explicit Oracle(std::int64_t n);

  std::int64_t size() const { return n_; }
  std::int64_t mode() const { return mode_; }
  std::int64_t support_max() const { return 2 * mode_; }
  std::int64_t domain_max() const { return n_; }

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
  bool uses_fallback() const { return n_ < 2; }

  /// Number of up-steps, distributed as F_n(m) / S_n.
  std::int64_t choose_m(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options = {}) const;
  LatticeWord sample(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options = {}) const;
  LatticeWord sample(UniformSource& src) const;

 private:
  std::int64_t n_;
  std::int64_t mode_;
  std::optional<Oracle> oracle_;
  std::vector<std::uint64_t> fallback_weights_;
};

LatticeWord sample(std::int64_t n, UniformSource& src);

/// Prefix heights >= 0, final height 0, total width 2n (H counts 2).
bool is_valid_path(const LatticeWord& path, std::int64_t n);

}  // namespace binrej::schroder
