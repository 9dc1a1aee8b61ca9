// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "binrej/bench.hpp"
#include "binrej/fibonacci.hpp"
#include "binrej/generate.hpp"
#include "binrej/motzkin.hpp"
#include "binrej/oracle/chi_square.hpp"
#include "binrej/oracle/counting.hpp"
#include "binrej/oracle/enumerate.hpp"
#include "binrej/oracle/verify.hpp"
#include "binrej/proposers.hpp"
#include "binrej/schroder.hpp"
#include "binrej/words.hpp"

namespace {

using namespace binrej;
using oracle::BigInt;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
    pass = pass && ok;
  }

  std::string summary() const {
    std::string text = detail.str();
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i) text += (i ? ", " : "; failed: ") + failures[i];
    if (failures.size() > 5) text += ", ...";
    return text;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

// a / b for big positive integers that do not fit a double.
double quotient(const BigInt& a, const BigInt& b) {
  const auto bits = static_cast<std::int64_t>(boost::multiprecision::msb(b));
  const unsigned shift = bits > 100 ? static_cast<unsigned>(bits - 100) : 0;
  return static_cast<double>(BigInt(a >> shift)) / static_cast<double>(BigInt(b >> shift));
}

std::string fmt(double x, int precision = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

Outcome exact_counts() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  o.require(oracle::count_fibonacci(10).total == 89, "F_10");
  o.require(oracle::count_schroder(4).total == 90, "S_4");
  o.require(oracle::count_motzkin(4, 1).total == 9, "Motzkin(4, 0)");
  auto sums = [](const oracle::CountTable& t) {
    return std::accumulate(t.per_m.begin(), t.per_m.end(), BigInt(0)) == t.total;
  };
  for (std::int64_t n = 0; n <= 14; ++n) {
    const auto t = oracle::count_fibonacci(n);
    o.require(sums(t) && t.total == oracle::fibonacci_by_recurrence(n) &&
                  t.total == oracle::enumerate_fibonacci(n).size(),
              "fib n=" + std::to_string(n));
  }
  for (std::int64_t n = 0; n <= 8; ++n) {
    const auto t = oracle::count_schroder(n);
    bool per_m = true;
    for (std::size_t m = 0; m < t.per_m.size(); ++m) {
      per_m = per_m && t.per_m[m] == oracle::schroder_by_dyck_subsequence(n, static_cast<std::int64_t>(m));
    }
    o.require(per_m && sums(t) && t.total == oracle::schroder_by_recurrence(n) &&
                  t.total == oracle::enumerate_schroder(n).size(),
              "schroder n=" + std::to_string(n));
  }
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (std::int64_t hp = 0; hp <= n; ++hp) {
      const auto t = oracle::count_motzkin(n, hp + 1);
      bool per_m = true;
      for (std::size_t m = 0; m < t.per_m.size(); ++m) {
        per_m = per_m && t.per_m[m] == oracle::motzkin_by_ballot(n, hp + 1, static_cast<std::int64_t>(m));
      }
      o.require(per_m && sums(t) && t.total == oracle::motzkin_by_height_dp(n, hp) &&
                    t.total == oracle::enumerate_motzkin(n, hp).size(),
                "motzkin n=" + std::to_string(n) + " h'=" + std::to_string(hp));
    }
  }
  const double t = seconds_since(start);
  o.require(t < 10.0, "runtime");
  o.detail << "runtime " << fmt(t, 3) << " s";
  return o;
}

// Pearson test of 10^6 draws against the uniform law on the enumerated support.
template <typename Draw>
oracle::ChiSquareReport uniform_draws(const std::vector<std::string>& support, Draw draw, std::uint64_t& outside) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < support.size(); ++i) index.emplace(support[i], i);
  std::vector<std::uint64_t> observed(support.size(), 0);
  for (int i = 0; i < 1'000'000; ++i) {
    const auto it = index.find(draw());
    if (it == index.end()) ++outside;
    else ++observed[it->second];
  }
  return oracle::chi_square_uniform(observed);
}

Outcome uniformity() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto& bounds = oracle::kEnumerationBounds;
  double worst = 0.0;  // largest statistic / threshold
  auto record = [&](const oracle::ChiSquareReport& r, std::uint64_t outside, const std::string& what) {
    worst = std::max(worst, r.statistic / r.threshold);
    o.require(r.pass && outside == 0, what + " chi2=" + fmt(r.statistic) + "/" + fmt(r.threshold));
  };
  {
    const fibonacci::Sampler s(bounds.fibonacci);
    UniformSource src(101);
    std::uint64_t outside = 0;
    const auto r = uniform_draws(oracle::enumerate_fibonacci(bounds.fibonacci), [&] { return s.sample(src); },
                                 outside);
    record(r, outside, "fib");
  }
  {
    std::vector<std::string> support;
    for (const auto& p : oracle::enumerate_schroder(bounds.schroder)) {
      support.push_back(p.to_string(schroder::kAlphabet));
    }
    const schroder::Sampler s(bounds.schroder);
    UniformSource src(102);
    std::uint64_t outside = 0;
    const auto r =
        uniform_draws(support, [&] { return s.sample(src).to_string(schroder::kAlphabet); }, outside);
    record(r, outside, "schroder");
  }
  for (std::int64_t hp = 0; hp <= bounds.motzkin; ++hp) {
    std::vector<std::string> support;
    for (const auto& f : oracle::enumerate_motzkin(bounds.motzkin, hp)) {
      support.push_back(f.to_string(motzkin::kAlphabet));
    }
    const motzkin::Sampler s(bounds.motzkin, hp);
    UniformSource src(200 + static_cast<std::uint64_t>(hp));
    std::uint64_t outside = 0;
    if (support.size() < 2) {
      for (int i = 0; i < 1'000'000; ++i) outside += s.sample(src).to_string(motzkin::kAlphabet) != support[0];
      o.require(outside == 0, "motzkin h'=" + std::to_string(hp));
      continue;
    }
    const auto r =
        uniform_draws(support, [&] { return s.sample(src).to_string(motzkin::kAlphabet); }, outside);
    record(r, outside, "motzkin h'=" + std::to_string(hp));
  }
  const double t = seconds_since(start);
  o.require(t < 300.0, "runtime");
  o.detail << "max chi2/threshold " << fmt(worst, 3) << ", runtime " << fmt(t, 3) << " s";
  return o;
}

Outcome validity_sweeps() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t checks = 0;
  for (const auto& [s, max_n] : {std::pair{Structure::Fibonacci, std::int64_t{2000}},
                                 std::pair{Structure::Schroder, std::int64_t{2000}},
                                 std::pair{Structure::Motzkin, std::int64_t{300}}}) {
    const auto summary = oracle::verify_sweep(s, max_n);
    checks += summary.checks;
    o.require(summary.pass(), std::string(to_string(s)) + " " + std::to_string(summary.failures.size()) +
                                  " violations");
  }
  const double t = seconds_since(start);
  o.require(t < 120.0, "runtime");
  o.detail << checks << " checks, runtime " << fmt(t, 3) << " s";
  return o;
}

Outcome gap_tables() {
  Outcome o;
  constexpr std::int64_t fib_gaps[20] = {5, 2, 1, 2, 0, 0, -3, -4, -3, 0, -10, -8, -4, -18, -15, -10, -3, -24, -18, -10};
  for (std::int64_t n = 0; n < 20; ++n) {
    const std::int64_t m = fibonacci::mode(n);
    o.require(fibonacci::majorant_gap(n, m, m + 1) == fib_gaps[n], "fib n=" + std::to_string(n));
  }
  constexpr std::int64_t below[6] = {-5, 0, 3, 4, 3, 13};
  constexpr std::int64_t above[6] = {4, 3, 0, -5, -12, -2};
  for (std::int64_t n = 0; n < 6; ++n) {
    const std::int64_t m = schroder::closed_form_mode(n);
    o.require(schroder::majorant_gap(n, m, m - 2) == below[n] && schroder::majorant_gap(n, m, m + 1) == above[n],
              "schroder n=" + std::to_string(n));
  }
  o.detail << "20 + 6 rows";
  return o;
}

Outcome schroder_acceptance() {
  Outcome o;
  const schroder::Sampler s(10'000);
  UniformSource src(5);
  GeneratorStats stats;
  while (stats.outer_loops < 100'000) s.choose_m(src, stats);
  const double rate =
      static_cast<double>(stats.outer_loops - stats.proposals_rejected) / static_cast<double>(stats.outer_loops);
  o.require(rate >= 0.575 && rate <= 0.615, "rate outside [0.575, 0.615]");
  // Exact acceptance probability sum F / sum B-bar at the largest exactly counted size, for reference.
  const std::int64_t n = oracle::kCountBound;
  const std::int64_t mode = schroder::mode(n);
  const auto f = oracle::count_schroder(n).per_m;
  const auto b = oracle::bin_weights(mode);
  BigInt reachable = 0;
  for (std::int64_t m = 0; m <= std::min(n, 2 * mode); ++m) reachable += f[static_cast<std::size_t>(m)];
  const BigInt proposal_mass = std::accumulate(b.begin(), b.end(), BigInt(0));
  const auto at = static_cast<std::size_t>(mode);
  const double exact = quotient(reachable * b[at], f[at] * proposal_mass);
  o.detail << "rate " << fmt(rate, 5) << " over " << stats.outer_loops << " proposals (exact law at n=" << n
           << ": " << fmt(exact, 5) << ")";
  return o;
}

struct Series {
  std::string label;
  Structure structure;
  std::function<std::optional<std::int64_t>(std::int64_t)> height;
};

const std::vector<Series>& series() {
  static const std::vector<Series> all{
      {"fib", Structure::Fibonacci, [](std::int64_t) { return std::optional<std::int64_t>{}; }},
      {"schroder", Structure::Schroder, [](std::int64_t) { return std::optional<std::int64_t>{}; }},
      {"motzkin h'=0", Structure::Motzkin, [](std::int64_t) { return std::optional<std::int64_t>{0}; }},
      {"motzkin near top", Structure::Motzkin,
       [](std::int64_t n) { return std::optional<std::int64_t>{near_top_height(n)}; }},
  };
  return all;
}

constexpr std::int64_t kSizes[] = {1'000, 10'000, 100'000};

std::uint64_t draws_for(std::int64_t n) { return n >= 100'000 ? 300 : n >= 10'000 ? 1'000 : 3'000; }

std::vector<BenchRow> bench_rows(const Series& s) {
  std::vector<BenchRow> rows;
  for (std::int64_t n : kSizes) {
    rows.push_back(run_bench({s.structure, n, s.height(n), draws_for(n), static_cast<std::uint64_t>(n) + 7}));
  }
  return rows;
}

std::vector<std::vector<BenchRow>>& cached_rows() {
  static std::vector<std::vector<BenchRow>> rows;
  if (rows.empty()) {
    for (const auto& s : series()) rows.push_back(bench_rows(s));
  }
  return rows;
}

double fitted_exponent(const std::vector<BenchRow>& rows, double (BenchRow::*metric)() const) {
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    xs.push_back(std::log(static_cast<double>(r.config.n)));
    ys.push_back(std::log((r.*metric)()));
  }
  return slope(xs, ys);
}

Outcome linear_time() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto& rows = cached_rows();
  for (std::size_t i = 0; i < series().size(); ++i) {
    const double e = fitted_exponent(rows[i], &BenchRow::mean_random_calls);
    o.require(e >= 0.9 && e <= 1.15, series()[i].label);
    o.detail << (i ? ", " : "") << series()[i].label << " " << fmt(e, 3);
  }
  o.detail << "; runtime " << fmt(seconds_since(start), 3) << " s";
  return o;
}

Outcome small_integers() {
  Outcome o;
  std::uint64_t runs = 0;
  auto check = [&](Structure s, std::int64_t n, std::optional<std::int64_t> h, std::uint64_t count) {
    const auto row = run_bench({s, n, h, count, static_cast<std::uint64_t>(n * 31 + h.value_or(0))});
    const auto limit = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    ++runs;
    o.require(row.stats.max_random_arg < limit && row.stats.max_operand < limit,
              std::string(to_string(s)) + " n=" + std::to_string(n) +
                  (h ? " h'=" + std::to_string(*h) : std::string()));
  };
  for (std::int64_t n : {64, 65, 100, 1'000, 10'000, 100'000}) {
    const std::uint64_t count = n >= 10'000 ? 50 : 300;
    check(Structure::Fibonacci, n, std::nullopt, count);
    check(Structure::Schroder, n, std::nullopt, count);
    for (std::int64_t h : {std::int64_t{0}, n / 4, n / 2, near_top_height(n), n - 2, n}) {
      check(Structure::Motzkin, n, h, count);
    }
  }
  for (std::int64_t hp = 0; hp <= 64; ++hp) check(Structure::Motzkin, 64, hp, 100);
  // The rows behind the timing fits count as gen runs as well.
  for (const auto& rows : cached_rows()) {
    for (const auto& row : rows) {
      const auto limit = static_cast<std::uint64_t>(row.config.n) * static_cast<std::uint64_t>(row.config.n);
      ++runs;
      o.require(row.stats.max_random_arg < limit && row.stats.max_operand < limit,
                std::string(to_string(row.config.structure)) + " n=" + std::to_string(row.config.n));
    }
  }
  o.detail << runs << " runs";
  return o;
}

Outcome large_ops() {
  Outcome o;
  const auto& rows = cached_rows();
  for (std::size_t i = 0; i < 2; ++i) {
    const double e = fitted_exponent(rows[i], &BenchRow::mean_large_ops);
    o.require(e <= 0.65, series()[i].label);
    o.detail << series()[i].label << " " << fmt(e, 3) << ", ";
  }
  // Basic regime: every request and operand on the sampling path stays below 3n + 7.
  std::uint64_t basic_runs = 0;
  for (std::int64_t n : {64, 1'000, 10'000, 100'000}) {
    for (std::int64_t hp = near_top_height(n); hp <= n; hp += std::max<std::int64_t>(1, (n - near_top_height(n)) / 8)) {
      if (motzkin::select_params(n, hp + 1).regime != motzkin::Regime::Basic) continue;
      const auto row = run_bench({Structure::Motzkin, n, hp, n >= 10'000 ? 50u : 300u, static_cast<std::uint64_t>(hp)});
      const auto limit = static_cast<std::uint64_t>(3 * n + 7);
      ++basic_runs;
      o.require(row.stats.max_random_arg <= limit && row.stats.max_operand <= limit,
                "motzkin basic n=" + std::to_string(n) + " h'=" + std::to_string(hp));
    }
  }
  o.require(basic_runs > 0, "no Basic-regime instance");
  o.detail << basic_runs << " Basic-regime runs within 3n+7";
  return o;
}

struct Dispersion {
  double spread;  // sum |m - M| B / sum B
  double mass;    // sum B / B(M)
};

Dispersion exact_dispersion(std::int64_t mode, std::int64_t k) {
  const auto w = oracle::extended_bin_weights(mode, k, 0);
  BigInt total = 0, spread = 0;
  for (std::size_t m = 0; m < w.size(); ++m) {
    total += w[m];
    spread += w[m] * std::abs(static_cast<std::int64_t>(m) - mode);
  }
  return {quotient(spread, total), quotient(total, w[static_cast<std::size_t>(mode)])};
}

Dispersion sampled_dispersion(std::int64_t mode, std::int64_t k) {
  const auto params = ExtendedBinomialParams::make(mode, k, 0);
  UniformSource src(static_cast<std::uint64_t>(mode * 10 + k));
  constexpr int kDraws = 200'000;
  double spread = 0;
  std::uint64_t at_mode = 0;
  for (int i = 0; i < kDraws; ++i) {
    const std::int64_t m = extended_bin(params, src);
    spread += static_cast<double>(std::abs(m - mode));
    at_mode += m == mode;
  }
  return {spread / kDraws, static_cast<double>(kDraws) / static_cast<double>(at_mode)};
}

Outcome dispersion() {
  Outcome o;
  for (std::int64_t k : {1, 3}) {
    std::optional<Dispersion> prev_exact, prev_sampled;
    for (std::int64_t mode : {100, 400, 1600}) {
      const Dispersion e = exact_dispersion(mode, k);
      const Dispersion s = sampled_dispersion(mode, k);
      if (prev_exact) {
        const std::string at = "k=" + std::to_string(k) + " M=" + std::to_string(mode);
        for (double r : {e.spread / prev_exact->spread, e.mass / prev_exact->mass, s.spread / prev_sampled->spread,
                         s.mass / prev_sampled->mass}) {
          o.require(r >= 1.0 && r <= 4.0, at + " factor " + fmt(r, 3));
        }
        o.detail << at << ": " << fmt(e.spread / prev_exact->spread, 3) << "/" << fmt(e.mass / prev_exact->mass, 3)
                 << " (sampled " << fmt(s.spread / prev_sampled->spread, 3) << "/"
                 << fmt(s.mass / prev_sampled->mass, 3) << ") ";
      }
      prev_exact = e;
      prev_sampled = s;
    }
  }
  return o;
}

Outcome cycle_lemma() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t words = 0;
  for (std::int64_t len = 1; len <= 12; ++len) {
    for (std::int64_t up = 1; up <= len; ++up) {
      for (std::int64_t down = 0; down < up && up + down <= len; ++down) {
        const StepCounts counts{up, down, len - up - down};
        for (const auto& w : oracle::enumerate_arrangements(counts)) {
          ++words;
          const auto fast = good_rotations(w);
          if (static_cast<std::int64_t>(fast.size()) != counts.height() || fast != good_rotations_brute_force(w)) {
            o.require(false, w.to_string());
          }
        }
      }
    }
  }
  UniformSource src(10);
  for (int i = 0; i < 10'000; ++i) {
    const auto len = static_cast<std::int64_t>(1 + src.random(300));
    const auto up = static_cast<std::int64_t>(1 + src.random(static_cast<std::uint64_t>(len)));
    const auto down = static_cast<std::int64_t>(src.random(static_cast<std::uint64_t>(std::min(up, len - up + 1))));
    const auto w = shuffle_multiset({up, down, len - up - down}, src);
    if (good_rotations(w) != good_rotations_brute_force(w)) o.require(false, "random " + w.to_string());
  }
  const double t = seconds_since(start);
  o.require(t < 60.0, "runtime");
  o.detail << words << " words exhaustively, 10000 random, runtime " << fmt(t, 3) << " s";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"exact counts", exact_counts},
      {"uniformity at the enumeration bounds", uniformity},
      {"exact validity sweeps", validity_sweeps},
      {"majorant gap tables", gap_tables},
      {"schroder main-loop acceptance rate", schroder_acceptance},
      {"linear mean random calls", linear_time},
      {"integers below n^2", small_integers},
      {"large operations", large_ops},
      {"proposer dispersion", dispersion},
      {"cycle lemma", cycle_lemma},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const Outcome o = c.run();
    failed += !o.pass;
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
