#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "rwg/measure.hpp"
#include "rwg/walks.hpp"

namespace rwg {

/// Exact computation is refused above this many group elements.
inline constexpr std::size_t kExactBudget = 20000;
/// Dense matrix-power cross-checks run only up to this order.
inline constexpr std::size_t kOraclePairLimit = 2048;

struct CurveOptions {
  bool oracle_pair = true;
  std::size_t pair_horizon = 200;  // k beyond which the dense check stops
  double pair_tolerance = 1e-10;
};

/// Exact distances to uniform for k = 0..K.
struct DistanceCurve {
  WalkSpec walk;
  std::size_t order = 0;
  std::vector<double> variation;
  std::vector<double> separation;
  std::vector<double> entropy_gap;
  double oracle_deviation = 0.0;  // max l-inf gap between the two routes
  std::size_t oracle_checked = 0; // number of k compared

  std::size_t k_max() const { return variation.empty() ? 0 : variation.size() - 1; }
};

/// Throws kBudget above kExactBudget and kNonErgodic for non-ergodic walks.
/// When paired, a disagreement beyond the tolerance throws kNumeric.
DistanceCurve distance_curve(const WalkSpec& walk, std::size_t K, const CurveOptions& opts = {});
DistanceCurve distance_curve(const Measure& nu, const WalkSpec& walk, std::size_t K,
                             const CurveOptions& opts = {});

/// nu^{*k} on a cyclic group from its one-dimensional transforms, O(n^2).
Measure circulant_power(const Measure& nu, std::size_t k);

/// tau(eps) = min{k : d(k) < eps}; unresolved eps are listed, not guessed.
struct MixingReport {
  std::map<double, std::size_t> tau;
  std::vector<double> unresolved;
  std::optional<std::size_t> tau_default;  // tau(1/2e)
};
double default_epsilon();  // 1/2e
MixingReport mixing_time(const std::vector<double>& curve, const std::vector<double>& eps);

/// A = {k : d(k) >= 1-a}, B = {k : b <= d(k) <= 1-a}, q = |A|/|B| with
/// q = +inf when B is empty.
struct FinitaryCutoff {
  double a = 0.0;
  double b = 0.0;
  std::size_t A_size = 0;
  std::size_t B_size = 0;
  double q = 0.0;
};
/// Throws kUsage when the curve never drops below b.
FinitaryCutoff finitary_cutoff(const std::vector<double>& curve, double a, double b);

struct CutoffRow {
  int n = 0;
  double t_n = 0.0;
  std::optional<std::size_t> tau;
  std::vector<double> pre;   // d(floor((1-eps) t_n)) per eps
  std::vector<double> post;  // d(floor((1+eps) t_n)) per eps
};

/// Finite-n evidence only: no asymptotic claim is ever made.
struct CutoffVerdict {
  std::vector<double> eps;
  std::vector<CutoffRow> rows;
  std::vector<bool> post_strictly_decreasing;  // per eps
  std::vector<bool> pre_strictly_increasing;   // per eps
  std::vector<double> post_spread;             // max - min across n, per eps
  std::vector<double> pre_spread;
  std::vector<DistanceCurve> curves;
};

CutoffVerdict cutoff_scan(const std::function<WalkSpec(int)>& family, const std::vector<int>& ns,
                          const std::function<double(int)>& t, const std::vector<double>& eps,
                          const CurveOptions& opts = {});

/// Continuous analogue: A = inf{x : f(x) = 1-a}, B = inf{x : f(x) = b},
/// q = A/(B-A). Levels are located by bisection on the nonincreasing f.
struct ContinuousCutoff {
  double A = 0.0;
  double B = 0.0;
  double q = 0.0;
};
ContinuousCutoff continuous_finitary(const std::function<double(double)>& f, double a, double b,
                                     double tolerance = 1e-9);

/// `n,k,distance` long format.
void write_curve_csv(std::ostream& os, const std::vector<DistanceCurve>& curves);
/// `n,tau,q,A_size,B_size`.
struct CutoffSummaryRow {
  int n = 0;
  std::optional<std::size_t> tau;
  FinitaryCutoff finitary;
};
void write_cutoff_summary_csv(std::ostream& os, const std::vector<CutoffSummaryRow>& rows);

}  // namespace rwg
