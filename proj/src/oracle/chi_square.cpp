#include "binrej/oracle/chi_square.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "binrej/errors.hpp"

namespace binrej::oracle {

double chi_square_quantile(std::int64_t dof, double significance) {
  if (dof < 1) throw ContractViolation("chi_square_quantile: dof must be >= 1");
  if (!(significance > 0.0 && significance < 1.0)) throw ContractViolation("chi_square_quantile: significance outside (0, 1)");
  const double z = boost::math::quantile(boost::math::normal(), 1.0 - significance);
  const double v = static_cast<double>(dof);
  const double c = 2.0 / (9.0 * v);
  const double base = 1.0 - c + z * std::sqrt(c);
  return v * base * base * base;
}

ChiSquareReport chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected_weights,
                           double significance) {
  if (observed.size() != expected_weights.size()) throw ContractViolation("chi_square: size mismatch");
  if (observed.size() < 2) throw ContractViolation("chi_square: need at least two cells");
  const std::uint64_t total = std::accumulate(observed.begin(), observed.end(), std::uint64_t{0});
  if (total < 10 * observed.size()) throw ContractViolation("chi_square: fewer than 10 observations per cell");

  double weight_sum = 0.0;
  for (double w : expected_weights) {
    if (!(w >= 0.0)) throw ContractViolation("chi_square: negative or NaN weight");
    weight_sum += w;
  }
  if (weight_sum <= 0.0) throw ContractViolation("chi_square: all weights are zero");

  // Cells expected to receive fewer than kMinExpected draws are pooled; if the
  // pool itself is still that small it joins the least-expected regular cell.
  constexpr double kMinExpected = 5.0;
  std::vector<double> exp_cells;
  std::vector<double> obs_cells;
  double pooled_exp = 0.0;
  double pooled_obs = 0.0;
  bool impossible_hit = false;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double o = static_cast<double>(observed[i]);
    if (expected_weights[i] == 0.0) {
      impossible_hit = impossible_hit || observed[i] > 0;
      continue;
    }
    const double e = static_cast<double>(total) * expected_weights[i] / weight_sum;
    if (e < kMinExpected) {
      pooled_exp += e;
      pooled_obs += o;
    } else {
      exp_cells.push_back(e);
      obs_cells.push_back(o);
    }
  }
  if (pooled_exp >= kMinExpected || (pooled_exp > 0.0 && exp_cells.empty())) {
    exp_cells.push_back(pooled_exp);
    obs_cells.push_back(pooled_obs);
  } else if (pooled_exp > 0.0) {
    const auto j = static_cast<std::size_t>(std::min_element(exp_cells.begin(), exp_cells.end()) - exp_cells.begin());
    exp_cells[j] += pooled_exp;
    obs_cells[j] += pooled_obs;
  }

  ChiSquareReport report;
  const auto cells = static_cast<std::int64_t>(exp_cells.size());
  if (cells < 2) throw ContractViolation("chi_square: fewer than two cells after pooling");
  for (std::size_t j = 0; j < exp_cells.size(); ++j) {
    const double diff = obs_cells[j] - exp_cells[j];
    report.statistic += diff * diff / exp_cells[j];
  }
  report.dof = cells - 1;
  report.threshold = chi_square_quantile(report.dof, significance);
  if (impossible_hit) report.statistic = std::numeric_limits<double>::infinity();
  report.pass = report.statistic <= report.threshold;
  return report;
}

ChiSquareReport chi_square_uniform(std::span<const std::uint64_t> observed, double significance) {
  const std::vector<double> weights(observed.size(), 1.0);
  return chi_square(observed, weights, significance);
}

}  // namespace binrej::oracle
