#pragma once

// Exhaustive enumerators used as ground truth by the uniformity tests.

#include <cstdint>
#include <string>
#include <vector>

#include "binrej/words.hpp"

namespace binrej::oracle {

struct EnumerationBounds {
  std::int64_t fibonacci = 14;
  std::int64_t schroder = 8;
  std::int64_t motzkin = 12;
};

inline constexpr EnumerationBounds kEnumerationBounds{};

/// Words over {a, b} with #a + 2 #b = n, in lexicographic order.
std::vector<std::string> enumerate_fibonacci(std::int64_t n, const EnumerationBounds& bounds = kEnumerationBounds);

/// Schröder paths of width 2n; Flat stands for the width-2 step.
std::vector<LatticeWord> enumerate_schroder(std::int64_t n, const EnumerationBounds& bounds = kEnumerationBounds);

/// Motzkin left factors of length n ending at final_height.
std::vector<LatticeWord> enumerate_motzkin(std::int64_t n, std::int64_t final_height,
                                           const EnumerationBounds& bounds = kEnumerationBounds);

/// Every arrangement of the multiset, in lexicographic order of Down < Flat < Up.
std::vector<LatticeWord> enumerate_arrangements(const StepCounts& counts);

}  // namespace binrej::oracle
