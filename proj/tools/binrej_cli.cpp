// binrej: generate objects, run the exact verification sweeps, benchmark.
//
//   binrej gen fib --n 10 --count 3 --seed 7
//   binrej gen motzkin --n 8 --height 3 --format json --stats
//   binrej verify --structure fib --max-n 2000
//   binrej bench --structure schroder --sizes 1000,10000 --count 200 --csv out.csv
//
// Exit codes: 0 success, 1 verification failure, 2 invalid flags,
// 3 internal invariant failure or --max-loops exceeded.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "binrej/bench.hpp"
#include "binrej/errors.hpp"
#include "binrej/generate.hpp"
#include "binrej/oracle/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text) {
  if (text == "entropy") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::size_t used = 0;
  std::uint64_t seed = 0;
  try {
    seed = std::stoull(text, &used, 10);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw UsageError("--seed must be a decimal 64-bit integer or 'entropy', got '" + text + "'");
  }
  return seed;
}

binrej::Structure structure_or_throw(const std::string& name) {
  if (auto s = binrej::parse_structure(name)) return *s;
  throw UsageError("unknown structure '" + name + "'");
}

struct GenArgs {
  std::string structure;
  std::int64_t n = -1;
  std::optional<std::int64_t> height;
  std::uint64_t count = 1;
  std::string seed = "0";
  std::string format = "text";
  bool stats = false;
  std::optional<std::uint64_t> max_loops;
};

int run_gen(const GenArgs& a) {
  const binrej::Structure s = structure_or_throw(a.structure);
  if (a.n < 0) throw UsageError("--n must be >= 0");
  if (s == binrej::Structure::Motzkin && !a.height) throw UsageError("--height is required for motzkin");
  if (s != binrej::Structure::Motzkin && a.height) throw UsageError("--height applies to motzkin only");

  std::optional<binrej::Generator> gen;
  try {
    gen.emplace(s, a.n, a.height);
  } catch (const binrej::ContractViolation& e) {
    throw UsageError(e.what());
  }
  binrej::UniformSource src(parse_seed(a.seed));
  binrej::GeneratorStats stats;
  binrej::SamplingOptions options;
  options.max_loops = a.max_loops;

  const bool json = a.format == "json";
  for (std::uint64_t i = 0; i < a.count; ++i) {
    const std::string object = gen->sample(src, stats, options);
    std::cout << (json ? gen->to_json(object) : object) << '\n';
  }
  std::cout.flush();
  if (a.stats) {
    std::cerr << "{\"objects\":" << stats.objects << ",\"outer_loops\":" << stats.outer_loops
              << ",\"max_random_arg\":" << stats.max_random_arg << ",\"large_ops\":" << stats.large_ops
              << ",\"random_calls\":" << stats.random_calls << ",\"max_operand\":" << stats.max_operand << "}\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string structure = "all";
  std::optional<std::int64_t> max_n;
  bool all_checks = false;
  unsigned threads = 0;
};

int run_verify(const VerifyArgs& a) {
  std::vector<binrej::Structure> targets;
  if (a.structure == "all") {
    targets = {binrej::Structure::Fibonacci, binrej::Structure::Schroder, binrej::Structure::Motzkin};
  } else {
    targets = {structure_or_throw(a.structure)};
  }
  if (a.max_n && *a.max_n < 1) throw UsageError("--max-n must be >= 1");

  bool all_pass = true;
  for (binrej::Structure s : targets) {
    const std::int64_t max_n = a.max_n.value_or(s == binrej::Structure::Motzkin ? 300 : 2000);
    const auto sink = [&](const binrej::oracle::CheckResult& r) {
      if (a.all_checks || !r.pass) std::cout << binrej::oracle::to_json_line(r) << '\n';
    };
    const auto summary = binrej::oracle::verify_sweep(s, max_n, a.threads, sink);
    std::cout << "{\"structure\":\"" << binrej::to_string(s) << "\",\"max_n\":" << max_n
              << ",\"instances\":" << summary.instances << ",\"checks\":" << summary.checks
              << ",\"failures\":" << summary.failures.size() << "}\n";
    all_pass = all_pass && summary.pass();
  }
  return all_pass ? 0 : kExitVerifyFailed;
}

struct BenchArgs {
  std::string structure = "all";
  std::vector<std::int64_t> sizes{1000, 10000, 100000};
  std::uint64_t count = 100;
  std::string seed = "0";
  std::optional<std::int64_t> height;
  bool near_top = false;
  std::string csv;
};

int run_bench(const BenchArgs& a) {
  std::vector<binrej::Structure> targets;
  if (a.structure == "all") {
    targets = {binrej::Structure::Fibonacci, binrej::Structure::Schroder, binrej::Structure::Motzkin};
  } else {
    targets = {structure_or_throw(a.structure)};
  }
  if (a.height && a.near_top) throw UsageError("--height and --near-top are exclusive");
  const std::uint64_t seed = parse_seed(a.seed);

  std::ofstream file;
  if (!a.csv.empty()) {
    file.open(a.csv);
    if (!file) throw UsageError("cannot open '" + a.csv + "' for writing");
  }
  std::ostream& out = a.csv.empty() ? std::cout : file;
  out << binrej::csv_header() << '\n';
  for (binrej::Structure s : targets) {
    for (std::int64_t n : a.sizes) {
      binrej::BenchCase c{s, n, std::nullopt, a.count, seed};
      if (s == binrej::Structure::Motzkin) c.final_height = a.near_top ? binrej::near_top_height(n) : a.height.value_or(0);
      try {
        out << binrej::to_csv(binrej::run_bench(c)) << '\n';
      } catch (const binrej::ContractViolation& e) {
        throw UsageError(e.what());
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform sampling of Fibonacci words, Schröder paths and Motzkin left factors"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate uniformly random objects");
  gen_cmd->add_option("structure", gen.structure, "fib | schroder | motzkin")
      ->required()
      ->check(CLI::IsMember({"fib", "schroder", "motzkin"}));
  gen_cmd->add_option("--n", gen.n, "Size")->required();
  gen_cmd->add_option("--height", gen.height, "Final height (motzkin only)");
  gen_cmd->add_option("--count", gen.count, "Number of objects")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Decimal 64-bit seed or 'entropy'");
  gen_cmd->add_option("--format", gen.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  gen_cmd->add_flag("--stats", gen.stats, "Print a stats line to stderr");
  gen_cmd->add_option("--max-loops", gen.max_loops, "Abort if a draw needs more proposals")->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exact sweeps over every acceptance step");
  verify_cmd->add_option("--structure", verify.structure, "fib | schroder | motzkin | all")
      ->check(CLI::IsMember({"fib", "schroder", "motzkin", "all"}));
  verify_cmd->add_option("--max-n", verify.max_n, "Largest size (default 2000; 300 for motzkin)");
  verify_cmd->add_flag("--all-checks", verify.all_checks, "Print passing checks too");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Mean operation counts and timings as CSV");
  bench_cmd->add_option("--structure", bench.structure, "fib | schroder | motzkin | all")
      ->check(CLI::IsMember({"fib", "schroder", "motzkin", "all"}));
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated sizes")->delimiter(',');
  bench_cmd->add_option("--count", bench.count, "Objects per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Decimal 64-bit seed or 'entropy'");
  bench_cmd->add_option("--height", bench.height, "Motzkin final height (default 0)");
  bench_cmd->add_flag("--near-top", bench.near_top, "Motzkin final height n - ceil(2 sqrt n)");
  bench_cmd->add_option("--csv", bench.csv, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*verify_cmd) return run_verify(verify);
    return run_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const binrej::LoopLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const binrej::InvariantFailure& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const binrej::ContractViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
