#pragma once

#include <cstdint>
#include <span>

namespace binrej::oracle {

struct ChiSquareReport {
  double statistic = 0.0;
  std::int64_t dof = 0;
  double threshold = 0.0;  // upper quantile at the requested significance
  bool pass = false;
};

/// Upper quantile of chi-square with `dof` degrees of freedom (Wilson-Hilferty).
double chi_square_quantile(std::int64_t dof, double significance = 1e-3);

/// Pearson test of observed counts against expected weights (any positive
/// scale). Cells of weight zero are left out of the statistic and dof; a
/// single observation in such a cell fails the test outright. Cells expected
/// to hold fewer than 5 draws are pooled into one cell before scoring.
/// Requires sum(observed) >= 10 * cells.
ChiSquareReport chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected_weights,
                           double significance = 1e-3);

/// Uniform expected weights.
ChiSquareReport chi_square_uniform(std::span<const std::uint64_t> observed, double significance = 1e-3);

}  // namespace binrej::oracle
