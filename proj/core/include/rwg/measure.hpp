#pragma once

#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "rwg/group.hpp"

namespace rwg {

/// Mass-one tolerance applied when a measure is constructed from user data.
inline constexpr double kMassTolerance = 1e-12;

enum class MeasureKind { kProbability, kCharge };

/// A real weight vector over a group with total mass one. Probability
/// measures are nonnegative; charges may carry negative weights.
///
/// Measures never renormalize silently: `normalized()` is the only way to
/// rescale the mass.
class Measure {
 public:
  static Measure probability(GroupPtr group, std::vector<double> weights);
  static Measure charge(GroupPtr group, std::vector<double> weights);

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::span<const double> weights() const noexcept { return weights_; }
  double operator[](Element g) const { return weights_[g]; }
  std::size_t size() const noexcept { return weights_.size(); }

  MeasureKind kind() const noexcept { return kind_; }
  bool is_probability() const noexcept { return kind_ == MeasureKind::kProbability; }

  double mass() const;
  /// Elements with weight strictly above `threshold` in absolute value.
  SupportSet support(double threshold = 0.0) const;
  /// The reflected measure s -> nu(s^-1).
  Measure reflected() const;
  bool is_symmetric(double tolerance = 0.0) const;
  Measure normalized() const;

 private:
  struct Unchecked {};
  Measure(Unchecked, GroupPtr group, std::vector<double> weights, MeasureKind kind);
  friend Measure convolve(const Measure&, const Measure&);
  friend Measure make_unchecked(GroupPtr, std::vector<double>, MeasureKind);

  GroupPtr group_;
  std::vector<double> weights_;
  MeasureKind kind_;
};

/// Builds a measure without the mass check. Intended for results of exact
/// linear operations (matrix products, solves) whose mass is preserved.
Measure make_unchecked(GroupPtr group, std::vector<double> weights, MeasureKind kind);

Measure uniform(GroupPtr group);
Measure dirac(GroupPtr group, std::size_t index);

bool same_group(const Measure& a, const Measure& b);

/// (nu * mu)(s) = sum_t nu(s t^-1) mu(t): mu first, then a step of nu.
Measure convolve(const Measure& nu, const Measure& mu);

/// nu^{*k} by k-1 iterated convolutions; nu^{*0} is the Dirac mass at e.
Measure convolution_power(const Measure& nu, std::size_t k);
/// nu^{*k} by repeated squaring, for a single large k.
Measure convolution_power_by_squaring(const Measure& nu, std::size_t k);
/// Calls `visit(k, nu^{*k})` for k = 0..k_max in one iterated pass.
void for_each_power(const Measure& nu, std::size_t k_max,
                    const std::function<void(std::size_t, const Measure&)>& visit);

/// max_A |mu(A) - nu(A)|, computed as half the l1 distance.
double variation_distance(const Measure& mu, const Measure& nu);
/// |G| max_t (1/|G| - nu_k(t)).
double separation_distance(const Measure& nu_k);
/// log|G| - H(nu_k) with 0 log(1/0) = 0.
double entropy_gap(const Measure& nu_k);
/// Raw l^p norm of mu - nu; p may be +infinity.
double lp_distance(const Measure& mu, const Measure& nu, double p);
/// |G|^{1-1/p} ||nu_k - pi||_p.
double scaled_lp_distance(const Measure& nu_k, double p);
/// Success probability of the optimal single-observation guess between mu and nu.
double switzer_guess_probability(const Measure& mu, const Measure& nu);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct DistanceReport {
  double variation = 0.0;
  double separation = 0.0;
  double entropy_gap = 0.0;
  std::map<double, double> lp;  // p -> raw ||nu_k - pi||_p
};

DistanceReport distances_to_uniform(const Measure& nu_k, std::span<const double> ps = {});

/// CSV with header `index,label,weight`.
void write_measure_csv(std::ostream& os, const Measure& m);

}  // namespace rwg
