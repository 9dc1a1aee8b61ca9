#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "binrej/oracle/chi_square.hpp"

namespace binrej::test {

/// Counts of each object over `draws` calls, keyed by the object.
template <typename T>
std::map<T, std::uint64_t> tally(std::uint64_t draws, const std::function<T()>& draw) {
  std::map<T, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[draw()];
  return counts;
}

/// Pearson test of `counts` against uniform weights over `support`; fails if
/// any drawn object is outside the support.
template <typename T>
::testing::AssertionResult uniform_over(const std::vector<T>& support, const std::map<T, std::uint64_t>& counts) {
  std::vector<std::uint64_t> observed;
  std::uint64_t matched = 0;
  for (const T& x : support) {
    const auto it = counts.find(x);
    observed.push_back(it == counts.end() ? 0 : it->second);
    matched += observed.back();
  }
  std::uint64_t total = 0;
  for (const auto& [_, c] : counts) total += c;
  if (matched != total) return ::testing::AssertionFailure() << (total - matched) << " draws outside the support";
  if (support.size() < 2) return ::testing::AssertionSuccess();
  const auto r = oracle::chi_square_uniform(observed);
  if (r.pass) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "chi2 = " << r.statistic << " > " << r.threshold << " (dof " << r.dof << ")";
}

/// Pearson test of a histogram over 0..weights.size()-1 against the weights.
inline ::testing::AssertionResult matches_weights(const std::vector<std::uint64_t>& observed,
                                                  const std::vector<double>& weights) {
  const auto r = oracle::chi_square(observed, weights);
  if (r.pass) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "chi2 = " << r.statistic << " > " << r.threshold << " (dof " << r.dof << ")";
}

}  // namespace binrej::test
