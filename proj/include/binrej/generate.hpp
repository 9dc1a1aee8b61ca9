#pragma once

// One entry point over the three families, for the CLI and the benchmarks.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "binrej/fibonacci.hpp"
#include "binrej/motzkin.hpp"
#include "binrej/rejection.hpp"
#include "binrej/rng.hpp"
#include "binrej/schroder.hpp"

namespace binrej {

enum class Structure { Fibonacci, Schroder, Motzkin };

/// "fib", "schroder", "motzkin".
std::string_view to_string(Structure s);
std::optional<Structure> parse_structure(std::string_view text);

class Generator {
 public:
  /// final_height is required for Motzkin and must be absent otherwise.
  Generator(Structure structure, std::int64_t n, std::optional<std::int64_t> final_height = std::nullopt);

  Structure structure() const { return structure_; }
  std::int64_t size() const { return n_; }
  std::optional<std::int64_t> final_height() const { return final_height_; }

  /// One object in its text form: a/b for Fibonacci, U/D/H for Schröder, U/D/F for Motzkin.
  std::string sample(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options = {}) const;

  /// The object as a one-line JSON record.
  std::string to_json(const std::string& object) const;

 private:
  Structure structure_;
  std::int64_t n_;
  std::optional<std::int64_t> final_height_;
  std::variant<fibonacci::Sampler, schroder::Sampler, motzkin::Sampler> sampler_;
};

}  // namespace binrej
