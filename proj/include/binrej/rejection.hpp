#pragma once

// Generic rejection loop with a binomial-type majorant.
//
// A target law F(m) is sampled by proposing m from a majorant B and accepting
// it with probability F(m) / B̄(m), where B̄ is B rescaled so that B̄(M) = F(M)
// at the first mode M of F. That probability telescopes into a chain of ratio
// quotients between M and m, each of which is a comparison of two small
// integers, so the engine never evaluates F or B themselves.

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

#include "binrej/errors.hpp"
#include "binrej/rng.hpp"

namespace binrej {

/// One Bernoulli draw: succeed with probability min(1, threshold / (trials * scale)).
///
/// With scale == 1 this is random(trials) < threshold. With scale > 1 the
/// product trials * scale is never formed: the draw is made digit by digit,
/// first random(trials) against threshold / scale, then on a tie random(scale)
/// against threshold % scale. Both forms give the same exact probability.
struct RatioTest {
  std::int64_t trials = 1;
  std::int64_t threshold = 0;
  std::int64_t scale = 1;
};

/// A chain of at most two ratio tests; passes iff every test passes.
struct StepTest {
  std::array<RatioTest, 2> tests{};
  std::size_t size = 0;

  static StepTest single(std::int64_t trials, std::int64_t threshold) {
    StepTest s;
    s.tests[0] = {trials, threshold, 1};
    s.size = 1;
    return s;
  }
  static StepTest scaled(std::int64_t trials, std::int64_t scale, std::int64_t threshold) {
    StepTest s;
    s.tests[0] = {trials, threshold, scale};
    s.size = 1;
    return s;
  }
  static StepTest pair(RatioTest first, RatioTest second) {
    StepTest s;
    s.tests = {first, second};
    s.size = 2;
    return s;
  }

  const RatioTest* begin() const { return tests.data(); }
  const RatioTest* end() const { return tests.data() + size; }
};

/// Counters for one sampling session.
struct GeneratorStats {
  std::uint64_t objects = 0;
  std::uint64_t outer_loops = 0;           // proposals drawn by the main loop
  std::uint64_t proposals_rejected = 0;
  std::uint64_t proposer_retries = 0;      // internal retries of bin / extended_bin at m = M
  std::uint64_t accept_steps_executed = 0; // StepTests run inside accept_m
  std::uint64_t max_operand = 0;           // largest trials/scale/threshold used by a StepTest
  std::uint64_t max_random_arg = 0;        // copied from the source
  std::uint64_t large_ops = 0;             // copied from the source
  std::uint64_t random_calls = 0;          // copied from the source

  void absorb_source(const UniformSource& src) {
    max_random_arg = src.max_request();
    large_ops = src.large_op_count();
    random_calls = src.calls();
  }
};

struct SamplingOptions {
  std::optional<std::uint64_t> max_loops;  // abort choose_m after this many proposals
};

/// Which side of the mode a step belongs to.
enum class Side { Below, Above };

/// Per-structure description of the acceptance chain.
///
/// below(i), i in [0, M-1], encodes RB̄(i)/RF(i); above(i), i in [M, m_max-1],
/// encodes RF(i)/RB̄(i). Proposals above domain_max() have F(m) = 0.
template <typename O>
concept RatioOracle = requires(const O& o, std::int64_t i) {
  { o.mode() } -> std::convertible_to<std::int64_t>;
  { o.support_max() } -> std::convertible_to<std::int64_t>;
  { o.domain_max() } -> std::convertible_to<std::int64_t>;
  { o.below(i) } -> std::same_as<StepTest>;
  { o.above(i) } -> std::same_as<StepTest>;
};

template <typename P>
concept Proposer = requires(P& p, UniformSource& src, GeneratorStats& stats) {
  { p(src, stats) } -> std::convertible_to<std::int64_t>;
};

inline bool run_ratio_test(const RatioTest& t, UniformSource& src, GeneratorStats& stats) {
  const auto note = [&stats](std::int64_t v) {
    if (static_cast<std::uint64_t>(v) > stats.max_operand) stats.max_operand = static_cast<std::uint64_t>(v);
  };
  note(t.trials);
  note(t.threshold);
  if (t.scale == 1) return src.random(static_cast<std::uint64_t>(t.trials)) < static_cast<std::uint64_t>(t.threshold);
  note(t.scale);
  const std::int64_t quotient = t.threshold / t.scale;
  const std::int64_t remainder = t.threshold % t.scale;
  const auto digit = static_cast<std::int64_t>(src.random(static_cast<std::uint64_t>(t.trials)));
  if (digit < quotient) return true;
  if (digit > quotient) return false;
  return static_cast<std::int64_t>(src.random(static_cast<std::uint64_t>(t.scale))) < remainder;
}

inline bool run_step(const StepTest& step, UniformSource& src, GeneratorStats& stats) {
  ++stats.accept_steps_executed;
  for (const RatioTest& t : step) {
    if (!run_ratio_test(t, src, stats)) return false;
  }
  return true;
}

/// Accept m with probability F(m) / B̄(m).
template <RatioOracle O>
bool accept_m(const O& oracle, std::int64_t m, UniformSource& src, GeneratorStats& stats) {
  if (m < 0 || m > oracle.support_max()) {
    throw ContractViolation("accept_m: proposal " + std::to_string(m) + " outside [0, " +
                            std::to_string(oracle.support_max()) + "]");
  }
  if (m > oracle.domain_max()) return false;
  const std::int64_t mode = oracle.mode();
  if (m < mode) {
    for (std::int64_t i = m; i < mode; ++i) {
      if (!run_step(oracle.below(i), src, stats)) return false;
    }
  } else {
    for (std::int64_t i = mode; i < m; ++i) {
      if (!run_step(oracle.above(i), src, stats)) return false;
    }
  }
  return true;
}

/// Draw m with probability F(m) / sum F, given a proposer of B(m) / sum B.
template <RatioOracle O, Proposer P>
std::int64_t choose_m(const O& oracle, P&& propose, UniformSource& src, GeneratorStats& stats,
                      const SamplingOptions& options = {}) {
  std::uint64_t loops = 0;
  for (;;) {
    if (options.max_loops && loops >= *options.max_loops) {
      throw LoopLimitExceeded("choose_m: no proposal accepted after " + std::to_string(loops) + " loops");
    }
    ++loops;
    ++stats.outer_loops;
    const std::int64_t m = propose(src, stats);
    if (accept_m(oracle, m, src, stats)) return m;
    ++stats.proposals_rejected;
  }
}

}  // namespace binrej
