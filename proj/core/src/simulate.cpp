#include "rwg/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "rwg/csv.hpp"
#include "rwg/error.hpp"
#include "rwg/walks.hpp"

namespace rwg {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

// Runs `body(rng, count)` once per block and returns the block results in
// block order, whatever the thread count.
template <class Body>
auto run_blocks(std::size_t trials, const SimulationOptions& opts, Body body) {
  using Result = decltype(body(std::declval<RngStream&>(), std::size_t{}));
  const std::size_t blocks = (trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<Result> results(blocks);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t b = next++; b < blocks; b = next++) {
      RngStream rng(opts.seed, b);
      const std::size_t count = std::min(kTrialBlock, trials - b * kTrialBlock);
      results[b] = body(rng, count);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(opts.threads, 1, std::max<std::size_t>(blocks, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return results;
}

StoppingTimeSample merge_times(std::vector<std::vector<std::uint64_t>> blocks) {
  StoppingTimeSample s;
  for (auto& b : blocks) s.times.insert(s.times.end(), b.begin(), b.end());
  s.censored = static_cast<std::size_t>(std::count(s.times.begin(), s.times.end(), kCensored));
  return s;
}

void require_trials(std::size_t trials) {
  if (trials == 0) fail(ErrorCode::kUsage, "simulation needs at least one trial");
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed), stream_id_(stream_id), engine_(seeded_engine(master_seed, stream_id)) {}

double RngStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t RngStream::below(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::kUsage, "empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

MeasureSampler::MeasureSampler(const Measure& nu) {
  if (!nu.is_probability()) fail(ErrorCode::kUsage, "sampling needs a probability");
  double running = 0.0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const double w = nu[static_cast<Element>(i)];
    if (w <= 0.0) continue;
    running += w;
    elements_.push_back(static_cast<Element>(i));
    cumulative_.push_back(running);
  }
}

Element MeasureSampler::operator()(RngStream& rng) const {
  const double u = rng.uniform() * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                                         elements_.size() - 1);
  return elements_[idx];
}

std::vector<Element> sample_trajectory(const Measure& nu, std::size_t k, RngStream& rng) {
  const MeasureSampler draw(nu);
  const Group& g = nu.group();
  std::vector<Element> path{g.identity()};
  path.reserve(k + 1);
  for (std::size_t j = 0; j < k; ++j) path.push_back(g.mul(draw(rng), path.back()));
  return path;
}

std::vector<double> empirical_law(const Measure& nu, std::size_t k, std::size_t trials,
                                  const SimulationOptions& opts) {
  require_trials(trials);
  const MeasureSampler draw(nu);
  const Group& g = nu.group();
  const auto blocks = run_blocks(trials, opts, [&](RngStream& rng, std::size_t count) {
    std::vector<std::uint64_t> hist(g.order(), 0);
    for (std::size_t t = 0; t < count; ++t) {
      Element x = g.identity();
      for (std::size_t j = 0; j < k; ++j) x = g.mul(draw(rng), x);
      ++hist[x];
    }
    return hist;
  });
  std::vector<double> law(g.order(), 0.0);
  for (const auto& h : blocks) {
    for (std::size_t i = 0; i < h.size(); ++i) law[i] += static_cast<double>(h[i]);
  }
  for (double& w : law) w /= static_cast<double>(trials);
  return law;
}

double StoppingTimeSample::exceedance(double k) const {
  if (times.empty()) return 0.0;
  const auto over = std::count_if(times.begin(), times.end(), [k](std::uint64_t t) {
    return t == kCensored || static_cast<double>(t) > k;
  });
  return static_cast<double>(over) / static_cast<double>(times.size());
}

double StoppingTimeSample::exceedance_stderr(double k) const {
  // An empty or full tail would report zero error; clamp to one event's worth.
  const double n = static_cast<double>(times.size());
  const double p = std::clamp(exceedance(k), 1.0 / n, 1.0 - 1.0 / n);
  return std::sqrt(p * (1.0 - p) / n);
}

double StoppingTimeSample::mean() const {
  double sum = 0.0;
  std::size_t n = 0;
  for (std::uint64_t t : times) {
    if (t == kCensored) continue;
    sum += static_cast<double>(t);
    ++n;
  }
  return n ? sum / static_cast<double>(n) : 0.0;
}

double StoppingTimeSample::mean_stderr() const {
  const double m = mean();
  double ss = 0.0;
  std::size_t n = 0;
  for (std::uint64_t t : times) {
    if (t == kCensored) continue;
    ss += (static_cast<double>(t) - m) * (static_cast<double>(t) - m);
    ++n;
  }
  return n > 1 ? std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
}

RandomToTopSample random_to_top_sut(int n, std::size_t trials, const SimulationOptions& opts) {
  if (n < 2) fail(ErrorCode::kUsage, "random-to-top needs n >= 2");
  require_trials(trials);
  const bool keep_deck = n <= kMaxSymmetricDegree;
  struct Block {
    std::vector<std::uint64_t> times;
    std::vector<std::uint64_t> decks;
  };
  auto blocks = run_blocks(trials, opts, [&](RngStream& rng, std::size_t count) {
    Block out;
    std::vector<int> deck(static_cast<std::size_t>(n));
    std::vector<char> touched(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < count; ++t) {
      std::iota(deck.begin(), deck.end(), 0);
      std::fill(touched.begin(), touched.end(), 0);
      int remaining = n;
      std::uint64_t steps = 0;
      while (remaining > 0) {
        const auto pos = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
        const int card = deck[pos];
        std::rotate(deck.begin(), deck.begin() + static_cast<std::ptrdiff_t>(pos),
                    deck.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
        if (!touched[static_cast<std::size_t>(card)]) {
          touched[static_cast<std::size_t>(card)] = 1;
          --remaining;
        }
        ++steps;
      }
      out.times.push_back(steps);
      if (keep_deck) out.decks.push_back(permutation_rank(deck));
    }
    return out;
  });
  RandomToTopSample s;
  std::vector<std::vector<std::uint64_t>> times;
  if (keep_deck) {
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    s.deck_counts.assign(fact, 0);
  }
  for (auto& b : blocks) {
    for (std::uint64_t r : b.decks) ++s.deck_counts[r];
    times.push_back(std::move(b.times));
  }
  s.time = merge_times(std::move(times));
  return s;
}

CouplingSample cube_coupling(int n, std::size_t trials, const SimulationOptions& opts,
                             std::size_t check_k) {
  if (n < 1 || n > 24) fail(ErrorCode::kUsage, "cube coupling needs 1 <= n <= 24");
  require_trials(trials);
  const std::size_t cells = std::size_t{1} << n;
  const bool check = cells <= kTableOrderLimit;
  struct Block {
    std::vector<std::uint64_t> times;
    std::vector<std::uint64_t> hist;
  };
  auto blocks = run_blocks(trials, opts, [&](RngStream& rng, std::size_t count) {
    Block out;
    if (check) out.hist.assign(cells, 0);
    for (std::size_t t = 0; t < count; ++t) {
      std::uint32_t x = 0;
      auto y = static_cast<std::uint32_t>(rng.below(cells));
      std::uint32_t chosen = 0;
      const std::uint32_t all = static_cast<std::uint32_t>(cells - 1);
      std::uint64_t steps = 0;
      std::optional<std::uint64_t> coupled;
      // Run until both the coupling time and the marginal check time have passed.
      while (!coupled || steps < check_k) {
        const auto i = static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(n)));
        const std::uint32_t bit = std::uint32_t{1} << i;
        const bool b = rng.coin();
        x = b ? (x | bit) : (x & ~bit);
        y = b ? (y | bit) : (y & ~bit);
        chosen |= bit;
        ++steps;
        if (!coupled && chosen == all) coupled = steps;
        if (check && steps == check_k) ++out.hist[x];
      }
      if (check && check_k == 0) ++out.hist[0];
      out.times.push_back(*coupled);
    }
    return out;
  });

  CouplingSample s;
  s.check_k = check_k;
  std::vector<std::vector<std::uint64_t>> times;
  std::vector<double> observed(check ? cells : 0, 0.0);
  for (auto& b : blocks) {
    for (std::size_t i = 0; i < b.hist.size(); ++i) observed[i] += static_cast<double>(b.hist[i]);
    times.push_back(std::move(b.times));
  }
  s.time = merge_times(std::move(times));

  if (check) {
    const Measure exact =
        convolution_power(driving_measure(WalkSpec{WalkName::kCubeLoops, n, 0}), check_k);
    // Cells with expected count below 5 are pooled into one.
    double pooled_obs = 0.0, pooled_exp = 0.0;
    std::size_t used = 0;
    const double N = static_cast<double>(trials);
    for (std::size_t i = 0; i < cells; ++i) {
      const double e = exact[static_cast<Element>(i)] * N;
      if (e < 5.0) {
        pooled_obs += observed[i];
        pooled_exp += e;
        continue;
      }
      s.chi_square += (observed[i] - e) * (observed[i] - e) / e;
      ++used;
    }
    if (pooled_exp > 0.0) {
      s.chi_square += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
      ++used;
    } else if (pooled_obs > 0.0) {
      s.chi_square = kInfinity;  // mass where the walk has none
    }
    s.dof = used > 1 ? used - 1 : 1;
    s.p_value = std::isinf(s.chi_square)
                    ? 0.0
                    : boost::math::cdf(boost::math::complement(
                          boost::math::chi_squared_distribution<double>(static_cast<double>(s.dof)),
                          s.chi_square));
  }
  return s;
}

StoppingTimeSample coupon_collector(int n, std::size_t trials, const SimulationOptions& opts) {
  if (n < 1) fail(ErrorCode::kUsage, "coupon collector needs n >= 1");
  require_trials(trials);
  auto blocks = run_blocks(trials, opts, [&](RngStream& rng, std::size_t count) {
    std::vector<std::uint64_t> times;
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < count; ++t) {
      std::fill(seen.begin(), seen.end(), 0);
      int remaining = n;
      std::uint64_t steps = 0;
      while (remaining > 0) {
        const auto c = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)));
        if (!seen[c]) {
          seen[c] = 1;
          --remaining;
        }
        ++steps;
      }
      times.push_back(steps);
    }
    return times;
  });
  return merge_times(std::move(blocks));
}

SwitzerResult switzer_game(const Measure& mu, const Measure& nu, std::size_t trials,
                           const SimulationOptions& opts) {
  require_trials(trials);
  const double predicted = switzer_guess_probability(mu, nu);
  const MeasureSampler draw_mu(mu), draw_nu(nu);
  const auto blocks = run_blocks(trials, opts, [&](RngStream& rng, std::size_t count) {
    std::uint64_t wins = 0;
    for (std::size_t t = 0; t < count; ++t) {
      const bool from_mu = rng.coin();
      const Element o = from_mu ? draw_mu(rng) : draw_nu(rng);
      const bool guess_mu = mu[o] >= nu[o];
      wins += guess_mu == from_mu;
    }
    return wins;
  });
  const auto wins = std::accumulate(blocks.begin(), blocks.end(), std::uint64_t{0});
  SwitzerResult r;
  r.trials = trials;
  r.win_rate = static_cast<double>(wins) / static_cast<double>(trials);
  r.stderr_ = std::sqrt(r.win_rate * (1.0 - r.win_rate) / static_cast<double>(trials));
  r.predicted = predicted;
  return r;
}

VisitsReport visits_before_return(const Measure& nu, Element target, std::size_t trials,
                                  const SimulationOptions& opts, std::uint64_t cap) {
  require_trials(trials);
  const Group& g = nu.group();
  if (target >= g.order()) fail(ErrorCode::kUsage, "target outside the group");
  const MeasureSampler draw(nu);
  const double order = static_cast<double>(g.order());
  struct Block {
    double visits = 0.0, time = 0.0, diff = 0.0, diff_sq = 0.0;
    std::size_t done = 0, censored = 0;
  };
  const auto blocks = run_blocks(trials, opts, [&](RngStream& rng, std::size_t count) {
    Block b;
    for (std::size_t t = 0; t < count; ++t) {
      Element x = g.identity();
      std::uint64_t visits = target == x ? 1 : 0;
      std::uint64_t steps = 0;
      bool returned = false;
      while (steps < cap) {
        x = g.mul(draw(rng), x);
        ++steps;
        if (x == g.identity()) {
          returned = true;
          break;
        }
        if (x == target) ++visits;
      }
      if (!returned) {
        ++b.censored;
        continue;
      }
      const double d = static_cast<double>(visits) - static_cast<double>(steps) / order;
      b.visits += static_cast<double>(visits);
      b.time += static_cast<double>(steps);
      b.diff += d;
      b.diff_sq += d * d;
      ++b.done;
    }
    return b;
  });
  Block total;
  for (const auto& b : blocks) {
    total.visits += b.visits;
    total.time += b.time;
    total.diff += b.diff;
    total.diff_sq += b.diff_sq;
    total.done += b.done;
    total.censored += b.censored;
  }
  VisitsReport r;
  r.trials = trials;
  r.censored = total.censored;
  if (total.done == 0) return r;
  const double N = static_cast<double>(total.done);
  r.mean_visits = total.visits / N;
  r.mean_return_time = total.time / N;
  r.ratio = r.mean_visits / r.mean_return_time;
  r.diff_mean = total.diff / N;
  const double var = N > 1 ? std::max(0.0, (total.diff_sq - N * r.diff_mean * r.diff_mean) / (N - 1))
                           : 0.0;
  r.diff_stderr = std::sqrt(var / N);
  return r;
}

void write_estimator_csv(std::ostream& os, const StoppingTimeSample& s, std::size_t k_max) {
  csv::row(os, {"k", "p_exceed", "stderr"});
  for (std::size_t k = 0; k <= k_max; ++k) {
    const double kk = static_cast<double>(k);
    csv::row(os, {std::to_string(k), csv::number(s.exceedance(kk)),
                  csv::number(s.exceedance_stderr(kk))});
  }
}

}  // namespace rwg
