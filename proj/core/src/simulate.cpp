#include "kendall/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "kendall/errors.hpp"
#include "kendall/families.hpp"

namespace kendall {
namespace {

// SplitMix64; every sample owns an independent counter-derived stream, so
// output is a pure function of (seed, sample index) and worker partitioning
// cannot affect it.
struct Stream {
  std::uint64_t s;

  explicit Stream(std::uint64_t seed, std::uint64_t idx) {
    s = mix(seed ^ mix(idx * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL));
  }
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t next() {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // uniform on (0,1), never 0 or 1
  double u01() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }
  double exponential(double rate) { return -std::log(u01()) / rate; }
};

struct Tally {
  std::vector<std::uint64_t> count;
  std::uint64_t censored = 0;

  void record(std::size_t n) {
    if (n >= count.size()) count.resize(n + 1, 0);
    ++count[n];
  }
  void merge(const Tally& o) {
    if (o.count.size() > count.size()) count.resize(o.count.size(), 0);
    for (std::size_t i = 0; i < o.count.size(); ++i) count[i] += o.count[i];
    censored += o.censored;
  }
};

EmpiricalDist finalize(const Tally& tally, std::uint64_t n_samples) {
  EmpiricalDist d;
  d.n_samples = n_samples;
  d.n_censored = tally.censored;
  const double n = static_cast<double>(n_samples);
  d.support.reserve(tally.count.size());
  d.prob.reserve(tally.count.size());
  d.stderr_.reserve(tally.count.size());
  for (std::size_t i = 0; i < tally.count.size(); ++i) {
    d.support.push_back(static_cast<long long>(i));
    const double p = static_cast<double>(tally.count[i]) / n;
    d.prob.push_back(p);
    d.stderr_.push_back(std::sqrt(p * (1.0 - p) / n));
  }
  return d;
}

template <typename PerSample>
EmpiricalDist run_parallel(std::uint64_t n_samples, int workers, PerSample per_sample) {
  workers = std::max(1, workers);
  std::vector<Tally> tallies(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = n_samples * static_cast<std::uint64_t>(w) / workers;
    const std::uint64_t end = n_samples * (static_cast<std::uint64_t>(w) + 1) / workers;
    threads.emplace_back([&per_sample, &tallies, w, begin, end]() {
      Tally& t = tallies[static_cast<std::size_t>(w)];
      for (std::uint64_t i = begin; i < end; ++i) per_sample(i, t);
    });
  }
  for (auto& th : threads) th.join();
  Tally total;
  for (const Tally& t : tallies) total.merge(t);
  return finalize(total, n_samples);
}

}  // namespace

EmpiricalDist simulate_first_passage_poisson(double c, double x, double horizon,
                                             std::uint64_t n_samples, std::uint64_t seed,
                                             int workers) {
  if (!(c > 0.0) || !(x > 0.0)) throw std::invalid_argument("simulate: c > 0, x > 0");
  if (!(horizon >= x)) throw std::invalid_argument("simulate: horizon >= x");
  if (n_samples == 0) throw std::invalid_argument("simulate: n_samples >= 1");

  const auto per_sample = [c, x, horizon, seed](std::uint64_t i, Tally& tally) {
    Stream rng(seed, i);
    double gap = x;   // drift time still needed to cross
    double tm = 0.0;  // elapsed time
    std::uint64_t jumps = 0;
    for (;;) {
      const double e = rng.exponential(c);
      if (e > gap) {
        // crossing happens mid-flight at tm + gap; tau - x = jumps exactly
        if (tm + gap <= horizon)
          tally.record(static_cast<std::size_t>(jumps));
        else
          ++tally.censored;
        break;
      }
      tm += e;
      gap += 1.0 - e;  // unit down-jump
      ++jumps;
      if (tm > horizon) {
        ++tally.censored;
        break;
      }
    }
  };
  return run_parallel(n_samples, workers, per_sample);
}

EmpiricalDist sample_y_poisson(double c, double t, std::uint64_t n_samples, std::uint64_t seed,
                               int workers) {
  if (!(c > 0.0) || c > 1.0)
    throw std::invalid_argument("sample_y_poisson: c in (0,1] (killed case not sampled)");
  if (!(t > 0.0)) throw std::invalid_argument("sample_y_poisson: t > 0");
  if (n_samples == 0) throw std::invalid_argument("sample_y_poisson: n_samples >= 1");

  const double lambda = levy_total_mass_poisson(c);
  const double lt = lambda * t;
  if (lt > 700.0) throw std::invalid_argument("sample_y_poisson: lambda*t too large");

  // inverse-CDF table of the jump law Pi_Y({n})/lambda, truncated at
  // cumulative mass 1 - 1e-12
  const FamilyParams params = FamilyParams::poisson(c);
  const ExponentHandle h = build_exponent(params);
  std::vector<double> cdf;
  double cum = 0.0;
  const std::size_t kTableCap = 1u << 22;
  for (std::size_t n = 1; cum < 1.0 - 1e-12; ++n) {
    if (n > kTableCap)
      throw precision_loss_error(
          "sample_y_poisson: jump-table truncation at 1e-12 unreachable (c too close to 1)");
    cum += levy_density(h, static_cast<double>(n)).value / lambda;
    cdf.push_back(std::min(cum, 1.0));
  }

  const double exp_neg_lt = std::exp(-lt);
  const auto per_sample = [&cdf, exp_neg_lt, seed](std::uint64_t i, Tally& tally) {
    Stream rng(seed, i);
    // Knuth product method for Poisson(lambda t)
    unsigned jumps = 0;
    double prod = rng.u01();
    while (prod > exp_neg_lt) {
      ++jumps;
      prod *= rng.u01();
    }
    std::uint64_t y = 0;
    for (unsigned j = 0; j < jumps; ++j) {
      const double u = rng.u01();
      const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
      y += static_cast<std::uint64_t>(it - cdf.begin()) + 1;
    }
    tally.record(static_cast<std::size_t>(y));
  };
  return run_parallel(n_samples, workers, per_sample);
}

}  // namespace kendall
