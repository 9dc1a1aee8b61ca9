#pragma once

// Exact re-derivation of every acceptance step.
//
// For one instance the checks are:
//   mode            first i with RF(i) <= 1 equals the oracle's M
//   step_bounds     every ratio test has 0 <= threshold <= trials * scale
//   step_exactness  each StepTest probability equals RB(i)/RF(i) below M and
//                   RF(i)/RB(i) from M on, with RB taken from the majorant's
//                   own definition (including its lowered weight at M)
//   sign_pattern    RB(i) < RF(i) exactly when i < M
//   boundary        Motzkin, extended regime: the inequality that keeps the
//                   two-test step at M-1 (AtPlus1) or M (AtMinus1) in range
//   regime          Motzkin with M >= 2 ran in the extended regime
//
// Steps are checked for i in [0, M-1] and [M, min(domain_max, support_max) - 1],
// the indices the rejection loop can reach.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binrej/generate.hpp"
#include "binrej/oracle/exact.hpp"
#include "binrej/rejection.hpp"

namespace binrej::oracle {

struct CheckResult {
  Structure structure = Structure::Fibonacci;
  std::int64_t n = 0;
  std::optional<std::int64_t> h;  // Motzkin only: h = final height + 1
  std::string check;
  bool pass = true;
  std::optional<std::int64_t> i;  // first failing index, when the check is per-step
  std::string detail;
};

/// {"structure":..,"n":..,"h":..,"check":..,"pass":..} plus "i" and "detail" on failure.
std::string to_json_line(const CheckResult& r);

/// Exact success probability of a StepTest.
ExactRational step_probability(const StepTest& step);

using RatioFn = std::function<ExactRational(std::int64_t)>;

/// A chain described by value, for checking oracles that are not one of the built-in ones.
struct ChainModel {
  std::int64_t mode = 0;
  std::int64_t support_max = 0;
  std::int64_t domain_max = 0;
  std::function<StepTest(std::int64_t)> below;
  std::function<StepTest(std::int64_t)> above;
  RatioFn rf;  // F(i+1)/F(i)
  RatioFn rb;  // B(i+1)/B(i) of the majorant as actually proposed
};

template <RatioOracle O>
ChainModel chain_model(const O& oracle, RatioFn rf, RatioFn rb) {
  return {oracle.mode(),
          oracle.support_max(),
          oracle.domain_max(),
          [&oracle](std::int64_t i) { return oracle.below(i); },
          [&oracle](std::int64_t i) { return oracle.above(i); },
          std::move(rf),
          std::move(rb)};
}

/// The mode, step_bounds, step_exactness and sign_pattern checks for one chain.
std::vector<CheckResult> verify_chain(Structure s, std::int64_t n, std::optional<std::int64_t> h, const ChainModel& chain);

/// All checks for one instance. For Motzkin, h is the internal h in [1, n+1].
std::vector<CheckResult> verify_fibonacci(std::int64_t n);
std::vector<CheckResult> verify_schroder(std::int64_t n);
std::vector<CheckResult> verify_motzkin(std::int64_t n, std::int64_t h);

std::vector<CheckResult> verify_oracle(Structure s, std::int64_t n, std::optional<std::int64_t> h = std::nullopt);

struct SweepSummary {
  std::uint64_t instances = 0;
  std::uint64_t checks = 0;
  std::vector<CheckResult> failures;
  bool pass() const { return failures.empty(); }
};

using CheckSink = std::function<void(const CheckResult&)>;

/// Fibonacci 3..max_n, Schröder 2..max_n, Motzkin 1..max_n with every h whose
/// mode is at least 2. Runs on `threads` workers (0 = hardware concurrency);
/// the sink, if any, sees results in instance order.
SweepSummary verify_sweep(Structure s, std::int64_t max_n, unsigned threads = 0, const CheckSink& sink = {});

}  // namespace binrej::oracle
