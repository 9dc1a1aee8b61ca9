#pragma once

// Lattice words over {Up, Down, Flat}: multiset shuffles and the cycle lemma.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "binrej/rng.hpp"

namespace binrej {

enum class Step : std::int8_t { Down = -1, Flat = 0, Up = 1 };

struct StepCounts {
  std::int64_t up = 0;
  std::int64_t down = 0;
  std::int64_t flat = 0;

  std::int64_t length() const { return up + down + flat; }
  std::int64_t height() const { return up - down; }
  friend bool operator==(const StepCounts&, const StepCounts&) = default;
};

class LatticeWord {
 public:
  LatticeWord() = default;
  explicit LatticeWord(std::vector<Step> steps);

  const std::vector<Step>& steps() const { return steps_; }
  const StepCounts& counts() const { return counts_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  std::int64_t height() const { return counts_.height(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  /// Letters for Up, Down, Flat, e.g. "UDF" or "UDH".
  std::string to_string(std::string_view alphabet = "UDF") const;
  /// Inverse of to_string; throws ContractViolation on unknown letters.
  static LatticeWord parse(std::string_view text, std::string_view alphabet = "UDF");

  friend bool operator==(const LatticeWord& a, const LatticeWord& b) { return a.steps_ == b.steps_; }

 private:
  std::vector<Step> steps_;
  StepCounts counts_;
};

/// Uniform arrangement of the multiset; position by position, each letter is
/// drawn with probability proportional to its remaining count. While more
/// letters remain than the source's watermark, positions are drawn with
/// random_halves so no request exceeds the watermark by much.
LatticeWord shuffle_multiset(const StepCounts& counts, UniformSource& src);

/// Start indices p whose rotation has every nonempty prefix sum > 0, in
/// increasing order. Linear time. Requires height >= 1.
std::vector<std::size_t> good_rotations(const LatticeWord& word);

/// Quadratic reference for good_rotations.
std::vector<std::size_t> good_rotations_brute_force(const LatticeWord& word);

LatticeWord rotate(const LatticeWord& word, std::size_t start);

/// Picks one good rotation uniformly, rotates to it and drops the leading Up.
/// The result has length len-1, final height h-1 and nonnegative prefixes.
LatticeWord cycle_to_factor(const LatticeWord& word, UniformSource& src);

/// Deterministic variant taking the index into good_rotations(word).
LatticeWord cycle_to_factor(const LatticeWord& word, std::size_t rotation_choice);

/// All prefix sums >= 0 and final sum == expected_height.
bool validate_factor(const LatticeWord& word, std::int64_t expected_height);

}  // namespace binrej
