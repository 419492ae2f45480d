#include "rwg/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rwg/csv.hpp"
#include "rwg/error.hpp"

namespace rwg {

namespace {

void require_same_group(const Measure& a, const Measure& b) {
  if (!same_group(a, b)) {
    fail(ErrorCode::kUsage, "measures live on different groups (" +
                                a.group().descriptor().to_string() + " vs " +
                                b.group().descriptor().to_string() + ")");
  }
}

void require_probability(const Measure& m, const char* what) {
  if (!m.is_probability()) fail(ErrorCode::kUsage, std::string(what) + " requires a probability");
}

Measure validated(GroupPtr group, std::vector<double> weights, MeasureKind kind) {
  if (!group) fail(ErrorCode::kUsage, "measure without a group");
  if (weights.size() != group->order()) {
    fail(ErrorCode::kUsage, "measure has " + std::to_string(weights.size()) +
                                " weights for a group of order " + std::to_string(group->order()));
  }
  const double mass = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(mass - 1.0) > kMassTolerance) {
    fail(ErrorCode::kUsage, "total mass " + csv::number(mass, 17) + " differs from 1");
  }
  if (kind == MeasureKind::kProbability) {
    for (double w : weights) {
      if (!(w >= 0.0)) fail(ErrorCode::kUsage, "probability measure with a negative weight");
    }
  }
  return make_unchecked(std::move(group), std::move(weights), kind);
}

}  // namespace

Measure::Measure(Unchecked, GroupPtr group, std::vector<double> weights, MeasureKind kind)
    : group_(std::move(group)), weights_(std::move(weights)), kind_(kind) {}

Measure make_unchecked(GroupPtr group, std::vector<double> weights, MeasureKind kind) {
  return Measure(Measure::Unchecked{}, std::move(group), std::move(weights), kind);
}

Measure Measure::probability(GroupPtr group, std::vector<double> weights) {
  return validated(std::move(group), std::move(weights), MeasureKind::kProbability);
}

Measure Measure::charge(GroupPtr group, std::vector<double> weights) {
  return validated(std::move(group), std::move(weights), MeasureKind::kCharge);
}

double Measure::mass() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

SupportSet Measure::support(double threshold) const {
  std::vector<Element> out;
  for (Element g = 0; g < weights_.size(); ++g) {
    if (std::abs(weights_[g]) > threshold) out.push_back(g);
  }
  return SupportSet(std::move(out));
}

Measure Measure::reflected() const {
  std::vector<double> w(weights_.size());
  for (Element g = 0; g < weights_.size(); ++g) w[group_->inv(g)] = weights_[g];
  return Measure(Unchecked{}, group_, std::move(w), kind_);
}

bool Measure::is_symmetric(double tolerance) const {
  for (Element g = 0; g < weights_.size(); ++g) {
    if (std::abs(weights_[g] - weights_[group_->inv(g)]) > tolerance) return false;
  }
  return true;
}

Measure Measure::normalized() const {
  const double m = mass();
  if (m == 0.0) fail(ErrorCode::kNumeric, "cannot normalize a measure of zero mass");
  std::vector<double> w(weights_);
  for (double& x : w) x /= m;
  return Measure(Unchecked{}, group_, std::move(w), kind_);
}

Measure uniform(GroupPtr group) {
  const std::size_t n = group->order();
  return make_unchecked(std::move(group), std::vector<double>(n, 1.0 / static_cast<double>(n)),
                        MeasureKind::kProbability);
}

Measure dirac(GroupPtr group, std::size_t index) {
  const Element x = group->element(index);
  std::vector<double> w(group->order(), 0.0);
  w[x] = 1.0;
  return make_unchecked(std::move(group), std::move(w), MeasureKind::kProbability);
}

bool same_group(const Measure& a, const Measure& b) {
  return a.group_ptr() == b.group_ptr() || a.group().descriptor() == b.group().descriptor();
}

Measure convolve(const Measure& nu, const Measure& mu) {
  require_same_group(nu, mu);
  const Group& g = nu.group();
  std::vector<std::pair<Element, double>> steps;
  for (Element r = 0; r < nu.size(); ++r) {
    if (nu[r] != 0.0) steps.emplace_back(r, nu[r]);
  }
  std::vector<double> out(g.order(), 0.0);
  for (Element t = 0; t < mu.size(); ++t) {
    const double mt = mu[t];
    if (mt == 0.0) continue;
    for (const auto& [r, w] : steps) out[g.mul(r, t)] += w * mt;
  }
  const MeasureKind kind = nu.is_probability() && mu.is_probability() ? MeasureKind::kProbability
                                                                      : MeasureKind::kCharge;
  return Measure(Measure::Unchecked{}, nu.group_ptr(), std::move(out), kind);
}

Measure convolution_power(const Measure& nu, std::size_t k) {
  if (k == 0) return dirac(nu.group_ptr(), nu.group().identity());
  Measure current = nu;
  for (std::size_t i = 1; i < k; ++i) current = convolve(nu, current);
  return current;
}

Measure convolution_power_by_squaring(const Measure& nu, std::size_t k) {
  Measure result = dirac(nu.group_ptr(), nu.group().identity());
  Measure base = nu;
  bool first = true;
  while (k > 0) {
    if (k & 1u) {
      result = first ? base : convolve(base, result);
      first = false;
    }
    k >>= 1;
    if (k) base = convolve(base, base);
  }
  return result;
}

void for_each_power(const Measure& nu, std::size_t k_max,
                    const std::function<void(std::size_t, const Measure&)>& visit) {
  Measure current = dirac(nu.group_ptr(), nu.group().identity());
  visit(0, current);
  for (std::size_t k = 1; k <= k_max; ++k) {
    current = convolve(nu, current);
    visit(k, current);
  }
}

double variation_distance(const Measure& mu, const Measure& nu) {
  require_same_group(mu, nu);
  double sum = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) sum += std::abs(mu.weights()[i] - nu.weights()[i]);
  return 0.5 * sum;
}

double separation_distance(const Measure& nu_k) {
  require_probability(nu_k, "separation distance");
  const double n = static_cast<double>(nu_k.size());
  const double min_weight = *std::min_element(nu_k.weights().begin(), nu_k.weights().end());
  return std::max(0.0, n * (1.0 / n - min_weight));
}

double entropy_gap(const Measure& nu_k) {
  require_probability(nu_k, "entropy gap");
  double entropy = 0.0;
  for (double w : nu_k.weights()) {
    if (w > 0.0) entropy -= w * std::log(w);
  }
  return std::max(0.0, std::log(static_cast<double>(nu_k.size())) - entropy);
}

double lp_distance(const Measure& mu, const Measure& nu, double p) {
  require_same_group(mu, nu);
  if (!(p >= 1.0)) fail(ErrorCode::kUsage, "l^p distance needs p >= 1");
  const auto w1 = mu.weights();
  const auto w2 = nu.weights();
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < w1.size(); ++i) m = std::max(m, std::abs(w1[i] - w2[i]));
    return m;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < w1.size(); ++i) sum += std::pow(std::abs(w1[i] - w2[i]), p);
  return std::pow(sum, 1.0 / p);
}

double scaled_lp_distance(const Measure& nu_k, double p) {
  const double raw = lp_distance(nu_k, uniform(nu_k.group_ptr()), p);
  const double n = static_cast<double>(nu_k.size());
  const double exponent = std::isinf(p) ? 1.0 : 1.0 - 1.0 / p;
  return std::pow(n, exponent) * raw;
}

double switzer_guess_probability(const Measure& mu, const Measure& nu) {
  require_probability(mu, "Switzer game");
  require_probability(nu, "Switzer game");
  return 0.5 * (1.0 + variation_distance(mu, nu));
}

DistanceReport distances_to_uniform(const Measure& nu_k, std::span<const double> ps) {
  const Measure pi = uniform(nu_k.group_ptr());
  DistanceReport r;
  r.variation = variation_distance(nu_k, pi);
  r.separation = separation_distance(nu_k);
  r.entropy_gap = entropy_gap(nu_k);
  for (double p : ps) r.lp[p] = lp_distance(nu_k, pi, p);
  return r;
}

void write_measure_csv(std::ostream& os, const Measure& m) {
  csv::row(os, {"index", "label", "weight"});
  for (Element g = 0; g < m.size(); ++g) {
    csv::row(os, {std::to_string(g), csv::sanitize(m.group().label(g)), csv::number(m[g], 17)});
  }
}

}  // namespace rwg
