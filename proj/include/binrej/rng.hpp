#pragma once

#include <cstdint>
#include <random>

namespace binrej {

/// Seedable source of unbiased bounded integers.
///
/// The stream is produced by std::mt19937_64, whose output sequence is fixed by
/// the C++ standard, and bounded with Lemire's multiply-and-reject method, so a
/// given seed gives the same request-for-request answers on every conforming
/// toolchain. The source also records the largest bound it was ever asked for
/// and how many requests exceeded a caller-chosen watermark.
///
/// Not thread-safe; use one source per thread.
class UniformSource {
 public:
  static constexpr std::uint64_t kMaxBound = std::uint64_t{1} << 62;

  explicit UniformSource(std::uint64_t seed = 0);

  /// Uniform integer in [0, k). Throws ContractViolation if k == 0 or k > 2^62.
  std::uint64_t random(std::uint64_t k);

  /// Uniform integer in [0, k) built from random(ceil(k/2)) and a fair bit,
  /// retrying the rare overflow to k when k is odd. Keeps each request at
  /// about half of k, for callers that must stay near the watermark.
  std::uint64_t random_halves(std::uint64_t k);

  /// True with probability min(1, q / p). Always consumes exactly one draw.
  bool ratio_test(std::uint64_t p, std::uint64_t q);

  /// Requests with k above the watermark are counted as large operations.
  void set_watermark(std::uint64_t n) { watermark_ = n; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t watermark() const { return watermark_; }
  std::uint64_t max_request() const { return max_request_; }
  std::uint64_t large_op_count() const { return large_ops_; }
  std::uint64_t calls() const { return calls_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t watermark_ = UINT64_MAX;
  std::uint64_t max_request_ = 0;
  std::uint64_t large_ops_ = 0;
  std::uint64_t calls_ = 0;
};

}  // namespace binrej
