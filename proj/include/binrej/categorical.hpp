#pragma once

#include <cstdint>
#include <span>

#include "binrej/rng.hpp"

namespace binrej {

/// Index m drawn with probability weights[m] / sum(weights): one random(sum) and a scan.
///
/// Used for the tiny sizes where the majorant proposers do not apply (mode 0).
/// The sum must fit a machine integer; throws ContractViolation on an empty or
/// all-zero table.
std::int64_t exact_fallback_sample(std::span<const std::uint64_t> weights, UniformSource& src);

}  // namespace binrej
