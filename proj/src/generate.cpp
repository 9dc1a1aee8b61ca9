#include "binrej/generate.hpp"

#include "binrej/errors.hpp"

namespace binrej {

namespace {

using SamplerVariant = std::variant<fibonacci::Sampler, schroder::Sampler, motzkin::Sampler>;

SamplerVariant make_sampler(Structure s, std::int64_t n, std::optional<std::int64_t> final_height) {
  if ((s == Structure::Motzkin) != final_height.has_value()) {
    throw ContractViolation("a final height is required for motzkin and only for motzkin");
  }
  switch (s) {
    case Structure::Fibonacci: return fibonacci::Sampler(n);
    case Structure::Schroder: return schroder::Sampler(n);
    case Structure::Motzkin: return motzkin::Sampler(n, *final_height);
  }
  throw ContractViolation("unknown structure");
}

// Minimal JSON string quoting; objects only ever contain ASCII letters.
std::string quoted(const std::string& s) { return '"' + s + '"'; }

}  // namespace

std::string_view to_string(Structure s) {
  switch (s) {
    case Structure::Fibonacci: return "fib";
    case Structure::Schroder: return "schroder";
    case Structure::Motzkin: return "motzkin";
  }
  return "?";
}

std::optional<Structure> parse_structure(std::string_view text) {
  for (Structure s : {Structure::Fibonacci, Structure::Schroder, Structure::Motzkin}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

Generator::Generator(Structure structure, std::int64_t n, std::optional<std::int64_t> final_height)
    : structure_(structure), n_(n), final_height_(final_height), sampler_(make_sampler(structure, n, final_height)) {}

std::string Generator::sample(UniformSource& src, GeneratorStats& stats, const SamplingOptions& options) const {
  return std::visit(
      [&](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, fibonacci::Sampler>) {
          return s.sample(src, stats, options);
        } else if constexpr (std::is_same_v<S, schroder::Sampler>) {
          return s.sample(src, stats, options).to_string(schroder::kAlphabet);
        } else {
          return s.sample(src, stats, options).to_string(motzkin::kAlphabet);
        }
      },
      sampler_);
}

std::string Generator::to_json(const std::string& object) const {
  const std::string n = std::to_string(n_);
  switch (structure_) {
    case Structure::Fibonacci: return "{\"n\":" + n + ",\"word\":" + quoted(object) + "}";
    case Structure::Schroder: return "{\"n\":" + n + ",\"path\":" + quoted(object) + "}";
    case Structure::Motzkin:
      return "{\"n\":" + n + ",\"height\":" + std::to_string(*final_height_) + ",\"word\":" + quoted(object) + "}";
  }
  return {};
}

}  // namespace binrej
