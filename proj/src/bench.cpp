#include "binrej/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "binrej/wide_int.hpp"

namespace binrej {

BenchRow run_bench(const BenchCase& c) {
  const Generator gen(c.structure, c.n, c.final_height);
  UniformSource src(c.seed);
  BenchRow row;
  row.config = c;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t i = 0; i < c.count; ++i) gen.sample(src, row.stats);
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::int64_t near_top_height(std::int64_t n) {
  // smallest r with r^2 >= 4n
  std::int64_t r = 0;
  while (static_cast<int128>(r) * r < static_cast<int128>(4) * n) ++r;
  return std::max<std::int64_t>(0, n - r);
}

std::string csv_header() {
  return "structure,n,height,count,mean_random_calls,mean_outer_loops,acceptance_rate,mean_large_ops,"
         "max_random_arg,max_operand,seconds_per_object";
}

std::string to_csv(const BenchRow& row) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s,%lld,%s,%llu,%.4f,%.4f,%.5f,%.4f,%llu,%llu,%.6g",
                std::string(to_string(row.config.structure)).c_str(), static_cast<long long>(row.config.n),
                row.config.final_height ? std::to_string(*row.config.final_height).c_str() : "",
                static_cast<unsigned long long>(row.config.count), row.mean_random_calls(), row.mean_outer_loops(),
                row.acceptance_rate(), row.mean_large_ops(), static_cast<unsigned long long>(row.stats.max_random_arg),
                static_cast<unsigned long long>(row.stats.max_operand),
                row.seconds / static_cast<double>(row.config.count));
  return buf;
}

}  // namespace binrej
