#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "rwg/measure.hpp"

namespace rwg {

/// One reproducible random stream per (master seed, stream id) pair.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on {0, ..., n-1}, unbiased.
  std::uint64_t below(std::uint64_t n);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

/// Trials are cut into blocks of this size, each with its own stream, so the
/// results never depend on the number of worker threads.
inline constexpr std::size_t kTrialBlock = 1024;

struct SimulationOptions {
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

/// Draws elements from a probability by inverse CDF over its support.
class MeasureSampler {
 public:
  explicit MeasureSampler(const Measure& nu);
  Element operator()(RngStream& rng) const;

 private:
  std::vector<Element> elements_;
  std::vector<double> cumulative_;
};

/// xi_0 = e, xi_j = zeta_j xi_{j-1}; length k+1.
std::vector<Element> sample_trajectory(const Measure& nu, std::size_t k, RngStream& rng);

/// Empirical law of xi_k over independent trials.
std::vector<double> empirical_law(const Measure& nu, std::size_t k, std::size_t trials,
                                  const SimulationOptions& opts);

inline constexpr std::uint64_t kCensored = std::numeric_limits<std::uint64_t>::max();

struct StoppingTimeSample {
  std::vector<std::uint64_t> times;  // kCensored marks a run cut at the cap
  std::size_t censored = 0;

  std::size_t trials() const noexcept { return times.size(); }
  /// Empirical P(T > k); censored runs count as exceeding.
  double exceedance(double k) const;
  /// Binomial standard error, with the proportion kept at least 1/N from 0 and 1.
  double exceedance_stderr(double k) const;
  double mean() const;         // over uncensored runs
  double mean_stderr() const;
};

/// Random-to-top shuffle run until every card has been moved at least once.
struct RandomToTopSample {
  StoppingTimeSample time;
  /// Counts of the deck's permutation rank at T, kept for n <= 8.
  std::vector<std::uint64_t> deck_counts;
};
RandomToTopSample random_to_top_sut(int n, std::size_t trials, const SimulationOptions& opts);

/// Paired cube-loops chains: a uniform coordinate is chosen, one fair coin
/// sets that coordinate in both chains. T is the time every coordinate has
/// been chosen. The first chain's law at `check_k` is compared with the exact
/// walk by a chi-square test.
struct CouplingSample {
  StoppingTimeSample time;
  std::size_t check_k = 0;
  double chi_square = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};
CouplingSample cube_coupling(int n, std::size_t trials, const SimulationOptions& opts,
                             std::size_t check_k = 5);

/// Plain coupon-collector times for n coupons.
StoppingTimeSample coupon_collector(int n, std::size_t trials, const SimulationOptions& opts);

/// A fair coin picks mu or nu, one sample is shown, the guess follows the
/// larger of mu(o), nu(o).
struct SwitzerResult {
  double win_rate = 0.0;
  double stderr_ = 0.0;
  double predicted = 0.0;  // (1 + ||mu - nu||)/2
  std::size_t trials = 0;
};
SwitzerResult switzer_game(const Measure& mu, const Measure& nu, std::size_t trials,
                           const SimulationOptions& opts);

/// Visits to `target` at times 0 <= t < T where T is the first return to e.
struct VisitsReport {
  double mean_visits = 0.0;
  double mean_return_time = 0.0;
  double ratio = 0.0;       // mean visits / mean return time
  double diff_mean = 0.0;   // mean of visits - T/|G| per trial
  double diff_stderr = 0.0;
  std::size_t trials = 0;
  std::size_t censored = 0;
};
inline constexpr std::uint64_t kReturnCap = 1000000;
VisitsReport visits_before_return(const Measure& nu, Element target, std::size_t trials,
                                  const SimulationOptions& opts, std::uint64_t cap = kReturnCap);

/// `k,p_exceed,stderr` for k = 0..k_max.
void write_estimator_csv(std::ostream& os, const StoppingTimeSample& s, std::size_t k_max);

}  // namespace rwg
