#include "rwg/cutoff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "rwg/csv.hpp"
#include "rwg/ergodic.hpp"
#include "rwg/error.hpp"
#include "rwg/spectral.hpp"

namespace rwg {

namespace {

void check_budget(std::size_t order) {
  if (order > kExactBudget) {
    fail(ErrorCode::kBudget, "exact computation limited to |G| <= " +
                                 std::to_string(kExactBudget) + ", got " + std::to_string(order));
  }
}

}  // namespace

DistanceCurve distance_curve(const WalkSpec& walk, std::size_t K, const CurveOptions& opts) {
  const GroupDescriptor gd = walk.group_descriptor();
  // Refuse before building anything large.
  if (gd.kind == GroupKind::kSymmetric && gd.n > kMaxSymmetricDegree) {
    fail(ErrorCode::kBudget, "symmetric group too large for exact computation");
  }
  const GroupPtr g = Group::build(gd);
  check_budget(g->order());
  return distance_curve(driving_measure(walk, g), walk, K, opts);
}

DistanceCurve distance_curve(const Measure& nu, const WalkSpec& walk, std::size_t K,
                             const CurveOptions& opts) {
  const Group& g = nu.group();
  check_budget(g.order());
  if (!nu.is_probability()) fail(ErrorCode::kUsage, "distance curve needs a probability");
  const ErgodicityReport erg = is_ergodic(g, nu.support());
  if (!erg.ergodic) fail(ErrorCode::kNonErgodic, erg.describe(g));

  DistanceCurve curve;
  curve.walk = walk;
  curve.order = g.order();
  curve.variation.reserve(K + 1);

  const bool pair = opts.oracle_pair && g.order() <= kOraclePairLimit;
  Eigen::MatrixXd P;
  Eigen::RowVectorXd row;
  if (pair) {
    P = StochasticOperator::from_measure(nu).matrix();
    row = Eigen::RowVectorXd::Zero(static_cast<Eigen::Index>(g.order()));
    row(g.identity()) = 1.0;
  }

  for_each_power(nu, K, [&](std::size_t k, const Measure& nu_k) {
    const DistanceReport d = distances_to_uniform(nu_k);
    curve.variation.push_back(d.variation);
    curve.separation.push_back(d.separation);
    curve.entropy_gap.push_back(d.entropy_gap);
    if (!pair || k > opts.pair_horizon) return;
    if (k > 0) row = row * P;
    double gap = 0.0;
    for (std::size_t i = 0; i < nu_k.size(); ++i) {
      gap = std::max(gap, std::abs(nu_k[static_cast<Element>(i)] - row(static_cast<Eigen::Index>(i))));
    }
    curve.oracle_deviation = std::max(curve.oracle_deviation, gap);
    ++curve.oracle_checked;
    if (gap > opts.pair_tolerance) {
      fail(ErrorCode::kNumeric, "convolution and matrix power disagree at k=" + std::to_string(k));
    }
  });
  return curve;
}

Measure circulant_power(const Measure& nu, std::size_t k) {
  const Group& g = nu.group();
  if (g.descriptor().kind != GroupKind::kCyclic) {
    fail(ErrorCode::kUnsupported, "circulant power needs a cyclic group");
  }
  const std::size_t n = g.order();
  const double two_pi_over_n = 2.0 * std::numbers::pi / static_cast<double>(n);
  // nu^(t) = sum_s nu(s) w^{ts}; nu^{*k}(s) = 1/n sum_t nu^(t)^k w^{-ts}.
  std::vector<std::complex<double>> powered(n);
  for (std::size_t t = 0; t < n; ++t) {
    std::complex<double> z = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      if (nu[static_cast<Element>(s)] == 0.0) continue;
      z += nu[static_cast<Element>(s)] * std::polar(1.0, two_pi_over_n * static_cast<double>((t * s) % n));
    }
    powered[t] = std::pow(z, static_cast<double>(k));
    if (k == 0) powered[t] = 1.0;
  }
  std::vector<double> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::complex<double> acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      acc += powered[t] * std::polar(1.0, -two_pi_over_n * static_cast<double>((t * s) % n));
    }
    out[s] = acc.real() / static_cast<double>(n);
  }
  return make_unchecked(nu.group_ptr(), std::move(out), nu.kind());
}

double default_epsilon() { return 1.0 / (2.0 * std::numbers::e); }

MixingReport mixing_time(const std::vector<double>& curve, const std::vector<double>& eps) {
  MixingReport r;
  const auto first_below = [&](double e) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < curve.size(); ++k) {
      if (curve[k] < e) return k;
    }
    return std::nullopt;
  };
  for (double e : eps) {
    if (auto k = first_below(e)) {
      r.tau[e] = *k;
    } else {
      r.unresolved.push_back(e);
    }
  }
  r.tau_default = first_below(default_epsilon());
  return r;
}

FinitaryCutoff finitary_cutoff(const std::vector<double>& curve, double a, double b) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
    fail(ErrorCode::kUsage, "finitary cut-off needs a, b in (0,1)");
  }
  if (curve.empty() || !(curve.back() < b)) {
    fail(ErrorCode::kUsage, "curve too short: it never drops below b");
  }
  FinitaryCutoff f{a, b, 0, 0, 0.0};
  for (double d : curve) {
    if (d >= 1.0 - a) ++f.A_size;
    if (d >= b && d <= 1.0 - a) ++f.B_size;
  }
  f.q = f.B_size == 0 ? kInfinity
                      : static_cast<double>(f.A_size) / static_cast<double>(f.B_size);
  return f;
}

CutoffVerdict cutoff_scan(const std::function<WalkSpec(int)>& family, const std::vector<int>& ns,
                          const std::function<double(int)>& t, const std::vector<double>& eps,
                          const CurveOptions& opts) {
  if (ns.empty()) fail(ErrorCode::kUsage, "cut-off scan needs at least one n");
  CutoffVerdict v;
  v.eps = eps;
  const double eps_max = eps.empty() ? 0.0 : *std::max_element(eps.begin(), eps.end());
  for (int n : ns) {
    const double tn = t(n);
    if (!(tn >= 0.0)) fail(ErrorCode::kUsage, "candidate time must be nonnegative");
    const auto K = static_cast<std::size_t>(std::floor((1.0 + eps_max) * tn));
    DistanceCurve curve = distance_curve(family(n), K, opts);
    CutoffRow row;
    row.n = n;
    row.t_n = tn;
    row.tau = mixing_time(curve.variation, {}).tau_default;
    for (double e : eps) {
      const auto lo = static_cast<std::size_t>(std::floor(std::max(0.0, (1.0 - e) * tn)));
      const auto hi = static_cast<std::size_t>(std::floor((1.0 + e) * tn));
      row.pre.push_back(curve.variation[lo]);
      row.post.push_back(curve.variation[hi]);
    }
    v.rows.push_back(std::move(row));
    v.curves.push_back(std::move(curve));
  }
  for (std::size_t i = 0; i < eps.size(); ++i) {
    bool dec = true, inc = true;
    double pre_lo = 1.0, pre_hi = 0.0, post_lo = 1.0, post_hi = 0.0;
    for (std::size_t r = 0; r < v.rows.size(); ++r) {
      const double pre = v.rows[r].pre[i];
      const double post = v.rows[r].post[i];
      if (r > 0) {
        dec = dec && post < v.rows[r - 1].post[i];
        inc = inc && pre > v.rows[r - 1].pre[i];
      }
      pre_lo = std::min(pre_lo, pre);
      pre_hi = std::max(pre_hi, pre);
      post_lo = std::min(post_lo, post);
      post_hi = std::max(post_hi, post);
    }
    v.post_strictly_decreasing.push_back(dec);
    v.pre_strictly_increasing.push_back(inc);
    v.pre_spread.push_back(pre_hi - pre_lo);
    v.post_spread.push_back(post_hi - post_lo);
  }
  return v;
}

ContinuousCutoff continuous_finitary(const std::function<double(double)>& f, double a, double b,
                                     double tolerance) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
    fail(ErrorCode::kUsage, "continuous cut-off needs a, b in (0,1)");
  }
  // inf{x : f(x) <= level}, which is the first hit of the level for continuous f.
  const auto first_hit = [&](double level) {
    if (f(0.0) <= level) return 0.0;
    double hi = 1.0;
    while (f(hi) > level) {
      hi *= 2.0;
      if (hi > 1e18) fail(ErrorCode::kNumeric, "level " + csv::number(level) + " not attained");
    }
    double lo = 0.0;
    while (hi - lo > tolerance * std::max(1.0, hi)) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) > level ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  ContinuousCutoff c;
  c.A = first_hit(1.0 - a);
  c.B = first_hit(b);
  c.q = c.B > c.A ? c.A / (c.B - c.A) : kInfinity;
  return c;
}

void write_curve_csv(std::ostream& os, const std::vector<DistanceCurve>& curves) {
  csv::row(os, {"n", "k", "distance"});
  for (const auto& c : curves) {
    for (std::size_t k = 0; k < c.variation.size(); ++k) {
      csv::row(os, {std::to_string(c.walk.n), std::to_string(k), csv::number(c.variation[k])});
    }
  }
}

void write_cutoff_summary_csv(std::ostream& os, const std::vector<CutoffSummaryRow>& rows) {
  csv::row(os, {"n", "tau", "q", "A_size", "B_size"});
  for (const auto& r : rows) {
    csv::row(os, {std::to_string(r.n), r.tau ? std::to_string(*r.tau) : std::string(),
                  csv::number(r.finitary.q), std::to_string(r.finitary.A_size),
                  std::to_string(r.finitary.B_size)});
  }
}

}  // namespace rwg
