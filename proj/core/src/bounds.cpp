#include "rwg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "rwg/csv.hpp"
#include "rwg/error.hpp"

namespace rwg {

namespace {

constexpr double kPi = std::numbers::pi;

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(log_binomial(n, k)));
}

double relative_slack(double lhs, double rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return (rhs - lhs) / scale;
}

}  // namespace

CircleBounds circle_bounds(int n, double k) {
  if (n < 3 || n % 2 == 0) fail(ErrorCode::kUsage, "circle bounds need odd n >= 3");
  const double n2 = static_cast<double>(n) * n;
  CircleBounds b;
  if (k >= n2 / 40.0) b.upper = std::exp(-kPi * kPi * k / (2.0 * n2));
  if (n >= 7) {
    b.lower = 0.5 * std::exp(-kPi * kPi * k / (2.0 * n2) - std::pow(kPi, 4) * k / (2.0 * n2 * n2));
  }
  return b;
}

CubeUpper cube_upper(int n, double c) {
  if (!(c > 0.0)) fail(ErrorCode::kUsage, "cube upper bound needs c > 0");
  if (n < 1) fail(ErrorCode::kUsage, "cube upper bound needs n >= 1");
  return {(n + 1.0) * (std::log(static_cast<double>(n)) + c) / 4.0,
          0.5 * (std::exp(std::exp(-c)) - 1.0)};
}

CubeLower cube_lower(int n, double c) {
  if (!(c > 0.0)) fail(ErrorCode::kUsage, "cube lower bound needs c > 0");
  return {(n + 1.0) * (std::log(static_cast<double>(n)) - c) / 4.0, 1.0 - 20.0 * std::exp(-c),
          true};
}

GrowthProfile growth_profile(const Group& g, const SupportSet& sigma, const Measure& nu) {
  if (sigma.empty()) fail(ErrorCode::kUsage, "growth profile needs a nonempty support");
  std::vector<std::size_t> dist(g.order(), static_cast<std::size_t>(-1));
  std::deque<Element> queue{g.identity()};
  dist[g.identity()] = 0;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Element u = queue.front();
    queue.pop_front();
    for (Element s : sigma.elements()) {
      const Element v = g.mul(s, u);
      if (dist[v] == static_cast<std::size_t>(-1)) {
        dist[v] = dist[u] + 1;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  if (reached < g.order()) {
    fail(ErrorCode::kNonErgodic, "support does not generate " + g.descriptor().to_string());
  }

  GrowthProfile p;
  p.diameter = *std::max_element(dist.begin(), dist.end());
  std::vector<std::size_t> count(p.diameter + 1, 0);
  for (std::size_t d : dist) ++count[d];
  p.volume.resize(p.diameter + 1);
  std::size_t running = 0;
  for (std::size_t k = 0; k <= p.diameter; ++k) {
    running += count[k];
    p.volume[k] = running;
  }
  p.min_weight = 1.0;
  for (Element s : sigma.elements()) p.min_weight = std::min(p.min_weight, nu[s]);
  return p;
}

bool moderate_growth_certificate(const GrowthProfile& profile, double A, double d) {
  const double delta = static_cast<double>(profile.diameter);
  const double full = static_cast<double>(profile.volume.back());
  for (std::size_t k = 1; k <= profile.diameter; ++k) {
    const double ratio = static_cast<double>(profile.volume[k]) / full;
    if (ratio < std::pow(static_cast<double>(k) / delta, d) / A) return false;
  }
  return true;
}

ModerateGrowthBounds moderate_growth_bounds(double A, double d, double delta, double L, double c) {
  if (!(A > 0 && d > 0 && delta > 0 && L > 0 && c > 0)) {
    fail(ErrorCode::kUsage, "moderate growth bounds need positive parameters");
  }
  ModerateGrowthBounds b;
  b.B = std::pow(2.0, d * (d + 3.0) / 4.0) * std::sqrt(A);
  b.upper_k = (1.0 + c) * delta * delta / L;
  b.upper = b.B * std::exp(-c);
  b.lower_k = c * delta * delta / (std::pow(2.0, 4.0 * d + 2.0) * A * A);
  b.lower = 0.5 * std::exp(-c);
  return b;
}

double diameter_eigenvalue_bound(double delta, double L) {
  if (!(delta >= 1.0) || !(L > 0.0 && L <= 1.0)) {
    fail(ErrorCode::kUsage, "diameter bound needs Delta >= 1 and 0 < L <= 1");
  }
  return 1.0 - L / (delta * delta);
}

CouponCollectorBound coupon_collector_bound(int n, double c) {
  if (n < 1 || c < 0.0) fail(ErrorCode::kUsage, "coupon collector bound needs n >= 1, c >= 0");
  const double dn = static_cast<double>(n);
  return {dn * std::log(dn) + c * dn, std::exp(-c)};
}

SeparationAnchor separation_anchor(const Measure& nu, std::size_t k_max) {
  Measure current = dirac(nu.group_ptr(), nu.group().identity());
  for (std::size_t k = 1; k <= k_max; ++k) {
    current = convolve(nu, current);
    const double m = *std::min_element(current.weights().begin(), current.weights().end());
    if (m > 0.0) return {k, m};
  }
  fail(ErrorCode::kNonErgodic, "no power of the measure has full support");
}

double separation_decay_bound(std::size_t group_order, double L, std::size_t k) {
  if (!(L > 0.0)) fail(ErrorCode::kUsage, "separation decay needs L > 0");
  return std::pow(1.0 - static_cast<double>(group_order) * L, static_cast<double>(k));
}

std::vector<InequalityCheck> appendix_inequality_suite(double tolerance) {
  std::vector<InequalityCheck> out;
  constexpr int kGrid = 10000;
  const auto finish = [&](InequalityCheck c) {
    c.passed = c.min_slack >= -tolerance;
    out.push_back(std::move(c));
  };

  {  // sum_{t=1}^{n-1} cos^{2k}(2 pi t/n) = 2 sum_{t=1}^{(n-1)/2} cos^{2k}(pi t/n), odd n.
    InequalityCheck c{"circle cosine-power identity", 0, 0.0, false};
    for (int n = 3; n <= 25; n += 2) {
      for (int k = 0; k <= 50; ++k) {
        double lhs = 0.0, rhs = 0.0;
        for (int t = 1; t <= n - 1; ++t) lhs += std::pow(std::cos(2.0 * kPi * t / n), 2.0 * k);
        for (int t = 1; t <= (n - 1) / 2; ++t) rhs += 2.0 * std::pow(std::cos(kPi * t / n), 2.0 * k);
        c.min_slack = std::min(c.min_slack, -std::abs(lhs - rhs));
        ++c.points;
      }
    }
    finish(std::move(c));
  }
  {  // cos x <= exp(-x^2/2) on [0, pi/2].
    InequalityCheck c{"cos x <= exp(-x^2/2)", 0, 0.0, false};
    c.min_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kGrid; ++i) {
      const double x = (kPi / 2.0) * i / kGrid;
      c.min_slack = std::min(c.min_slack, std::exp(-x * x / 2.0) - std::cos(x));
      ++c.points;
    }
    finish(std::move(c));
  }
  {  // sum_{j>=1} exp(-(j^2-1)x) <= sum_{j>=0} exp(-3jx), x > 0; tails below 1e-15 dropped.
    InequalityCheck c{"gaussian series <= geometric series", 0, 0.0, false};
    c.min_slack = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= kGrid; ++i) {
      const double x = 1e-3 + (10.0 - 1e-3) * (i - 1) / (kGrid - 1);
      double lhs = 0.0;
      for (int j = 1;; ++j) {
        const double term = std::exp(-(static_cast<double>(j) * j - 1.0) * x);
        lhs += term;
        if (term < 1e-15) break;
      }
      double rhs = 0.0;
      for (int j = 0;; ++j) {
        const double term = std::exp(-3.0 * j * x);
        rhs += term;
        if (term < 1e-15) break;
      }
      c.min_slack = std::min(c.min_slack, relative_slack(lhs, rhs));
      ++c.points;
    }
    finish(std::move(c));
  }
  {  // cos x >= exp(-x^2/2 - x^4/2) on [0, pi/6].
    InequalityCheck c{"cos x >= exp(-x^2/2 - x^4/2)", 0, 0.0, false};
    c.min_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kGrid; ++i) {
      const double x = (kPi / 6.0) * i / kGrid;
      c.min_slack = std::min(c.min_slack, std::cos(x) - std::exp(-x * x / 2.0 - std::pow(x, 4) / 2.0));
      ++c.points;
    }
    finish(std::move(c));
  }
  {  // C(n,l)(1-2l/(n+1))^{2k} >= C(n,n+1-l)(1-2(n+1-l)/(n+1))^{2k}, l <= n/2.
    InequalityCheck c{"binomial term domination", 0, 0.0, false};
    c.min_slack = std::numeric_limits<double>::infinity();
    for (int n = 2; n <= 25; ++n) {
      for (int l = 1; 2 * l <= n; ++l) {
        for (int k = 0; k <= 50; ++k) {
          const double big = binomial(n, l) * std::pow(1.0 - 2.0 * l / (n + 1.0), 2.0 * k);
          const double small =
              binomial(n, n + 1 - l) * std::pow(1.0 - 2.0 * (n + 1.0 - l) / (n + 1.0), 2.0 * k);
          c.min_slack = std::min(c.min_slack, relative_slack(small, big));
          ++c.points;
        }
      }
    }
    finish(std::move(c));
  }
  {  // C(a,b) <= a^b / b! for b <= a.
    InequalityCheck c{"C(a,b) <= a^b/b!", 0, 0.0, false};
    c.min_slack = std::numeric_limits<double>::infinity();
    for (int a = 1; a <= 25; ++a) {
      for (int b = 0; b <= a; ++b) {
        const double lhs = binomial(a, b);
        const double rhs = std::exp(b * std::log(static_cast<double>(a)) - std::lgamma(b + 1.0));
        c.min_slack = std::min(c.min_slack, relative_slack(lhs, rhs));
        ++c.points;
      }
    }
    finish(std::move(c));
  }
  {  // (1-2j/(n+1))^{2k} <= exp(-j log n - j c) at k = (n+1)(log n + c)/4, 1 <= j <= n/2.
    InequalityCheck c{"cube eigenvalue power vs exponential", 0, 0.0, false};
    c.min_slack = std::numeric_limits<double>::infinity();
    for (int n = 2; n <= 25; ++n) {
      for (int ci = 1; ci <= 100; ++ci) {
        const double cc = 0.05 * ci;
        const double k = (n + 1.0) * (std::log(static_cast<double>(n)) + cc) / 4.0;
        for (int j = 1; 2 * j <= n; ++j) {
          const double lhs = std::pow(1.0 - 2.0 * j / (n + 1.0), 2.0 * k);
          const double rhs = std::exp(-j * std::log(static_cast<double>(n)) - j * cc);
          c.min_slack = std::min(c.min_slack, relative_slack(lhs, rhs));
          ++c.points;
        }
      }
    }
    finish(std::move(c));
  }
  return out;
}

void write_bound_csv(std::ostream& os, const std::vector<BoundRow>& rows) {
  csv::row(os, {"k", "exact", "upper", "lower"});
  for (const auto& r : rows) {
    csv::row(os, {std::to_string(r.k), csv::number(r.exact), csv::optional_number(r.upper),
                  csv::optional_number(r.lower)});
  }
}

}  // namespace rwg
