#include "binrej/oracle/enumerate.hpp"

#include <algorithm>
#include <functional>

#include "binrej/errors.hpp"

namespace binrej::oracle {

namespace {

void check_bound(std::int64_t n, std::int64_t bound, const char* what) {
  if (n < 0 || n > bound) {
    throw ContractViolation(std::string(what) + ": size " + std::to_string(n) + " outside [0, " +
                            std::to_string(bound) + "]");
  }
}

// Depth-first walk over step sequences. `width` is how much of the budget a
// step consumes; paths are pruned as soon as they cannot return to `target`.
std::vector<LatticeWord> walk(std::int64_t budget, std::int64_t target, bool flat_is_double) {
  std::vector<LatticeWord> out;
  std::vector<Step> steps;
  const std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t left, std::int64_t height) {
    if (left == 0) {
      if (height == target) out.emplace_back(steps);
      return;
    }
    if (std::abs(height - target) > left) return;
    const std::int64_t flat_width = flat_is_double ? 2 : 1;
    if (height > 0) {
      steps.push_back(Step::Down);
      rec(left - 1, height - 1);
      steps.pop_back();
    }
    if (left >= flat_width) {
      steps.push_back(Step::Flat);
      rec(left - flat_width, height);
      steps.pop_back();
    }
    steps.push_back(Step::Up);
    rec(left - 1, height + 1);
    steps.pop_back();
  };
  rec(budget, 0);
  return out;
}

}  // namespace

std::vector<std::string> enumerate_fibonacci(std::int64_t n, const EnumerationBounds& bounds) {
  check_bound(n, bounds.fibonacci, "enumerate_fibonacci");
  std::vector<std::string> out;
  std::string word;
  const std::function<void(std::int64_t)> rec = [&](std::int64_t left) {
    if (left == 0) {
      out.push_back(word);
      return;
    }
    word.push_back('a');
    rec(left - 1);
    word.pop_back();
    if (left >= 2) {
      word.push_back('b');
      rec(left - 2);
      word.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<LatticeWord> enumerate_schroder(std::int64_t n, const EnumerationBounds& bounds) {
  check_bound(n, bounds.schroder, "enumerate_schroder");
  return walk(2 * n, 0, true);
}

std::vector<LatticeWord> enumerate_motzkin(std::int64_t n, std::int64_t final_height, const EnumerationBounds& bounds) {
  check_bound(n, bounds.motzkin, "enumerate_motzkin");
  if (final_height < 0 || final_height > n) throw ContractViolation("enumerate_motzkin: final height outside [0, n]");
  return walk(n, final_height, false);
}

std::vector<LatticeWord> enumerate_arrangements(const StepCounts& counts) {
  if (counts.up < 0 || counts.down < 0 || counts.flat < 0) throw ContractViolation("enumerate_arrangements: negative count");
  std::vector<Step> steps;
  steps.insert(steps.end(), static_cast<std::size_t>(counts.down), Step::Down);
  steps.insert(steps.end(), static_cast<std::size_t>(counts.flat), Step::Flat);
  steps.insert(steps.end(), static_cast<std::size_t>(counts.up), Step::Up);
  std::vector<LatticeWord> out;
  do {
    out.emplace_back(steps);
  } while (std::next_permutation(steps.begin(), steps.end()));
  return out;
}

}  // namespace binrej::oracle
