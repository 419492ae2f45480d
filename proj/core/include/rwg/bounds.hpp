#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rwg/group.hpp"
#include "rwg/measure.hpp"

namespace rwg {

/// Simple walk on the circle, odd n. The upper bound exp(-pi^2 k / 2n^2)
/// holds for k >= n^2/40; the lower bound
/// 1/2 exp(-pi^2 k / 2n^2 - pi^4 k / 2n^4) holds for n >= 7 and every k.
/// Each side is absent outside its hypothesis.
struct CircleBounds {
  std::optional<double> upper;
  std::optional<double> lower;
};
CircleBounds circle_bounds(int n, double k);

/// Nearest-neighbour cube walk: at k = (n+1)(log n + c)/4, c > 0, the squared
/// variation distance is at most (exp(exp(-c)) - 1)/2.
struct CubeUpper {
  double k = 0.0;
  double bound = 0.0;  // bound on the squared distance
};
CubeUpper cube_upper(int n, double c);

/// Markov-inequality lower bound 1 - 20 e^{-c} at k = (n+1)(log n - c)/4.
/// Valid only asymptotically in n.
struct CubeLower {
  double k = 0.0;
  double bound = 0.0;
  bool asymptotic = true;
};
CubeLower cube_lower(int n, double c);

/// Volume growth of the Cayley digraph (edges g -> sigma g): volume[k] is the
/// number of elements reachable in at most k steps, which equals |Sigma^k|
/// when e is in Sigma.
struct GrowthProfile {
  std::vector<std::size_t> volume;  // volume[0..diameter]
  std::size_t diameter = 0;
  double min_weight = 0.0;  // L = min nu(s) over the support
  std::optional<std::pair<double, double>> moderate;  // certified (A, d)

  std::size_t at(std::size_t k) const { return volume[std::min(k, diameter)]; }
};
GrowthProfile growth_profile(const Group& g, const SupportSet& sigma, const Measure& nu);

/// V(k)/V(Delta) >= (1/A)(k/Delta)^d for every 1 <= k <= Delta.
bool moderate_growth_certificate(const GrowthProfile& profile, double A, double d);

struct ModerateGrowthBounds {
  double B = 0.0;        // 2^{d(d+3)/4} sqrt(A)
  double upper_k = 0.0;  // (1+c) Delta^2 / L
  double upper = 0.0;    // B e^{-c}
  double lower_k = 0.0;  // c Delta^2 / (2^{4d+2} A^2)
  double lower = 0.0;    // e^{-c}/2
};
ModerateGrowthBounds moderate_growth_bounds(double A, double d, double delta, double L, double c);

/// lambda_2 <= 1 - L / Delta^2.
double diameter_eigenvalue_bound(double delta, double L);

/// P(T > n log n + c n) <= e^{-c} for the coupon-collector time T.
struct CouponCollectorBound {
  double k = 0.0;
  double bound = 0.0;
};
CouponCollectorBound coupon_collector_bound(int n, double c);

/// First time n0 at which nu^{*n0} has full support, and L = min nu^{*n0}.
struct SeparationAnchor {
  std::size_t n0 = 0;
  double min_weight = 0.0;
};
SeparationAnchor separation_anchor(const Measure& nu, std::size_t k_max = 100000);

/// s(k n0) <= (1 - |G| L)^k.
double separation_decay_bound(std::size_t group_order, double L, std::size_t k);

/// One row of the appendix inequality suite. `min_slack` is the smallest
/// (rhs - lhs) seen, relative where the sides span many magnitudes; identities
/// report -|lhs - rhs|.
struct InequalityCheck {
  std::string name;
  std::size_t points = 0;
  double min_slack = 0.0;
  bool passed = false;
};
std::vector<InequalityCheck> appendix_inequality_suite(double tolerance = 1e-12);

/// Row of the `k,exact,upper,lower` CSV; absent bounds print as empty cells.
struct BoundRow {
  std::size_t k = 0;
  double exact = 0.0;
  std::optional<double> upper;
  std::optional<double> lower;
};
void write_bound_csv(std::ostream& os, const std::vector<BoundRow>& rows);

}  // namespace rwg
