#pragma once

// Timing and operation counts averaged over many samples of one instance.

#include <cstdint>
#include <optional>
#include <string>

#include "binrej/generate.hpp"

namespace binrej {

struct BenchCase {
  Structure structure = Structure::Fibonacci;
  std::int64_t n = 0;
  std::optional<std::int64_t> final_height;  // Motzkin only
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
};

struct BenchRow {
  BenchCase config;
  GeneratorStats stats;  // totals over all `count` samples
  double seconds = 0.0;

  double per_object(std::uint64_t total) const { return static_cast<double>(total) / static_cast<double>(config.count); }
  double mean_random_calls() const { return per_object(stats.random_calls); }
  double mean_outer_loops() const { return per_object(stats.outer_loops); }
  double mean_large_ops() const { return per_object(stats.large_ops); }
  double acceptance_rate() const {
    return static_cast<double>(stats.outer_loops - stats.proposals_rejected) / static_cast<double>(stats.outer_loops);
  }
};

/// Draws `count` objects from one source seeded with `seed`.
BenchRow run_bench(const BenchCase& c);

/// n - ceil(2 sqrt(n)), clamped at 0: a final height in the Basic regime for large n.
std::int64_t near_top_height(std::int64_t n);

std::string csv_header();
std::string to_csv(const BenchRow& row);

}  // namespace binrej
