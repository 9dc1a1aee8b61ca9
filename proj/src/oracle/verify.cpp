#include "binrej/oracle/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "binrej/errors.hpp"
#include "binrej/fibonacci.hpp"
#include "binrej/motzkin.hpp"
#include "binrej/schroder.hpp"
#include "binrej/wide_int.hpp"
#include "json.hpp"

namespace binrej::oracle {

namespace {

ExactRational frac(std::int64_t num, std::int64_t den) { return ExactRational(BigInt(num), BigInt(den)); }

std::string str(const ExactRational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// Ratio B(i+1)/B(i) of a majorant whose unmodified ratio is `under` and whose
// weight at M is lowered to the larger of its two neighbours.
ExactRational majorant_ratio(const RatioFn& under, std::int64_t mode, std::int64_t i) {
  if (i != mode - 1 && i != mode) return under(i);
  const ExactRational across = under(mode - 1) * under(mode);  // B(M+1) / B(M-1)
  const bool plus_side_heavier = across >= 1;
  if (i == mode - 1) return plus_side_heavier ? across : ExactRational(1);
  return plus_side_heavier ? ExactRational(1) : across;
}

class Checker {
 public:
  Checker(Structure s, std::int64_t n, std::optional<std::int64_t> h) : structure_(s), n_(n), h_(h) {}

  void record(std::string check, bool pass, std::optional<std::int64_t> i = std::nullopt, std::string detail = {}) {
    results_.push_back({structure_, n_, h_, std::move(check), pass, i, std::move(detail)});
  }

  void check_chain(const ChainModel& chain) {
    const RatioFn& rf = chain.rf;
    const RatioFn& rb = chain.rb;
    const std::int64_t mode = chain.mode;
    const std::int64_t last = std::min(chain.domain_max, chain.support_max) - 1;

    std::int64_t first_descent = chain.domain_max;
    for (std::int64_t i = 0; i < chain.domain_max; ++i) {
      if (rf(i) <= 1) {
        first_descent = i;
        break;
      }
    }
    record("mode", first_descent == mode, std::nullopt,
           first_descent == mode ? "" : "first i with RF(i) <= 1 is " + std::to_string(first_descent));

    std::optional<std::int64_t> bad_bounds, bad_exact, bad_sign;
    std::string bounds_detail, exact_detail, sign_detail;
    for (std::int64_t i = 0; i <= last; ++i) {
      const bool below = i < mode;
      const StepTest step = below ? chain.below(i) : chain.above(i);
      if (!bad_bounds) {
        for (const RatioTest& t : step) {
          const bool ok = t.trials >= 1 && t.scale >= 1 && t.threshold >= 0 &&
                          static_cast<int128>(t.threshold) <= static_cast<int128>(t.trials) * t.scale;
          if (!ok) {
            bad_bounds = i;
            bounds_detail = "test (" + std::to_string(t.trials) + ", " + std::to_string(t.threshold) + ", " +
                            std::to_string(t.scale) + ") is not a probability";
            break;
          }
        }
      }
      const ExactRational f = rf(i);
      const ExactRational b = rb(i);
      if (!bad_exact) {
        const ExactRational intended = below ? b / f : f / b;
        const ExactRational encoded = step_probability(step);
        if (encoded != intended) {
          bad_exact = i;
          exact_detail = "encoded " + str(encoded) + ", intended " + str(intended);
        }
      }
      if (!bad_sign && (b < f) != below) {
        bad_sign = i;
        sign_detail = "RB = " + str(b) + ", RF = " + str(f);
      }
    }
    record("step_bounds", !bad_bounds, bad_bounds, bounds_detail);
    record("step_exactness", !bad_exact, bad_exact, exact_detail);
    record("sign_pattern", !bad_sign, bad_sign, sign_detail);
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  Structure structure_;
  std::int64_t n_;
  std::optional<std::int64_t> h_;
  std::vector<CheckResult> results_;
};

RatioFn bin_under(std::int64_t mode) {
  return [mode](std::int64_t i) { return frac(2 * mode - i, i + 1); };
}

}  // namespace

std::string to_json_line(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["structure"] = to_string(r.structure);
  j["n"] = r.n;
  j["h"] = r.h ? nlohmann::ordered_json(*r.h) : nlohmann::ordered_json(nullptr);
  j["check"] = r.check;
  j["pass"] = r.pass;
  if (!r.pass) {
    if (r.i) j["i"] = *r.i;
    if (!r.detail.empty()) j["detail"] = r.detail;
  }
  return j.dump();
}

ExactRational step_probability(const StepTest& step) {
  ExactRational p = 1;
  for (const RatioTest& t : step) p *= ExactRational(BigInt(t.threshold), BigInt(t.trials) * t.scale);
  return p;
}

std::vector<CheckResult> verify_chain(Structure s, std::int64_t n, std::optional<std::int64_t> h,
                                      const ChainModel& chain) {
  Checker c(s, n, h);
  c.check_chain(chain);
  return c.take();
}

std::vector<CheckResult> verify_fibonacci(std::int64_t n) {
  const fibonacci::Oracle oracle(n);
  const std::int64_t mode = oracle.mode();
  Checker c(Structure::Fibonacci, n, std::nullopt);
  const RatioFn under = bin_under(mode);
  c.check_chain(chain_model(
      oracle, [n](std::int64_t i) { return frac((n - 2 * i) * (n - 1 - 2 * i), (i + 1) * (n - i)); },
      [&](std::int64_t i) { return majorant_ratio(under, mode, i); }));
  return c.take();
}

std::vector<CheckResult> verify_schroder(std::int64_t n) {
  const schroder::Oracle oracle(n);
  const std::int64_t mode = oracle.mode();
  Checker c(Structure::Schroder, n, std::nullopt);
  const RatioFn under = bin_under(mode);
  c.check_chain(chain_model(
      oracle, [n](std::int64_t i) { return frac((n + i + 1) * (n - i), (i + 1) * (i + 2)); },
      [&](std::int64_t i) { return majorant_ratio(under, mode, i); }));
  return c.take();
}

std::vector<CheckResult> verify_motzkin(std::int64_t n, std::int64_t h) {
  const motzkin::Instance inst = motzkin::select_params(n, h);
  Checker c(Structure::Motzkin, n, h);
  const std::int64_t u = n + 1 - h;
  const RatioFn rf = [u, h](std::int64_t i) { return frac((u - 2 * i) * (u - 1 - 2 * i), (i + 1) * (i + 1 + h)); };

  const bool extended = inst.regime == motzkin::Regime::Extended;
  c.record("regime", inst.mode < 2 || extended, std::nullopt,
           inst.mode < 2 || extended ? "" : "no alpha in [0, k-1] gives a valid chain");

  if (!extended) {
    const motzkin::BasicOracle basic(n, h, inst.mode);
    c.check_chain(chain_model(basic, rf, [](std::int64_t) { return ExactRational(1); }));
    return c.take();
  }

  const ExtendedBinomialParams& p = inst.params;
  const std::int64_t M = p.mode, k = p.k, a = p.alpha, N = p.trials();
  const RatioFn under = [N, k](std::int64_t i) { return frac(N - i, k * (i + 1)); };
  const motzkin::ExtendedOracle ext(n, h, p);
  c.check_chain(chain_model(ext, rf, [&](std::int64_t i) { return majorant_ratio(under, M, i); }));

  // The lowered weight at M sits on the heavier neighbour; select_which must agree.
  const bool plus_heavier = under(M - 1) * under(M) >= 1;
  const bool which_ok = plus_heavier == (p.which == Which::AtPlus1);
  if (p.which == Which::AtPlus1) {
    const std::int64_t b = n + 3 - h - 2 * M;
    const ExactRational lhs = ExactRational(BigInt(k) * b * (b - 1), BigInt(M + h) * (k * M + a));
    c.record("boundary", which_ok && lhs > 1, M - 1,
             "AtPlus1: k(n+3-h-2M)(n+2-h-2M)/((M+h)(kM+a)) = " + str(lhs) + (which_ok ? "" : ", which mismatch"));
  } else {
    const std::int64_t b = n + 1 - h - 2 * M;
    const ExactRational lhs = ExactRational(BigInt(k) * b * (b - 1), BigInt(M + 1 + h) * (k * M + 1 + a));
    c.record("boundary", which_ok && lhs <= 1, M,
             "AtMinus1: k(n+1-h-2M)(n-h-2M)/((M+1+h)(kM+1+a)) = " + str(lhs) + (which_ok ? "" : ", which mismatch"));
  }
  return c.take();
}

std::vector<CheckResult> verify_oracle(Structure s, std::int64_t n, std::optional<std::int64_t> h) {
  switch (s) {
    case Structure::Fibonacci: return verify_fibonacci(n);
    case Structure::Schroder: return verify_schroder(n);
    case Structure::Motzkin:
      if (!h) throw ContractViolation("verify_oracle: motzkin needs h");
      return verify_motzkin(n, *h);
  }
  throw ContractViolation("verify_oracle: unknown structure");
}

SweepSummary verify_sweep(Structure s, std::int64_t max_n, unsigned threads, const CheckSink& sink) {
  struct Job {
    std::int64_t n;
    std::optional<std::int64_t> h;
  };
  std::vector<Job> jobs;
  switch (s) {
    case Structure::Fibonacci:
      for (std::int64_t n = 3; n <= max_n; ++n) jobs.push_back({n, std::nullopt});
      break;
    case Structure::Schroder:
      for (std::int64_t n = 2; n <= max_n; ++n) jobs.push_back({n, std::nullopt});
      break;
    case Structure::Motzkin:
      for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t h = 1; h <= n + 1; ++h) {
          if (motzkin::mode(n, h) >= 2) jobs.push_back({n, h});
        }
      }
      break;
  }

  std::vector<std::vector<CheckResult>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  const auto work = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      try {
        results[j] = verify_oracle(s, jobs[j].n, jobs[j].h);
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = jobs.size();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  if (error) std::rethrow_exception(error);

  SweepSummary summary;
  summary.instances = jobs.size();
  for (const auto& per_instance : results) {
    for (const CheckResult& r : per_instance) {
      ++summary.checks;
      if (!r.pass) summary.failures.push_back(r);
      if (sink) sink(r);
    }
  }
  return summary;
}

}  // namespace binrej::oracle
