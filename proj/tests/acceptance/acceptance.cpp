// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rwg/bounds.hpp"
#include "rwg/cutoff.hpp"
#include "rwg/error.hpp"
#include "rwg/factorize.hpp"
#include "rwg/fourier.hpp"
#include "rwg/simulate.hpp"
#include "rwg/spectral.hpp"
#include "rwg/walks.hpp"

using namespace rwg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates sub-checks; the first few failures are kept for the report line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) failures_ += (failures_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  Outcome done() const {
    std::ostringstream os;
    os << (total_ - failed_) << "/" << total_ << " checks";
    if (!notes_.empty()) os << ", " << notes_;
    if (failed_) os << "; failed: " << failures_;
    return {failed_ == 0, os.str()};
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string failures_;
  std::string notes_;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Measure walk(const std::string& w) { return driving_measure(WalkSpec::parse(w)); }

std::vector<double> exact_curve(const Measure& nu, std::size_t K) {
  const Measure pi = uniform(nu.group_ptr());
  std::vector<double> out;
  for_each_power(nu, K, [&](std::size_t, const Measure& m) { out.push_back(variation_distance(m, pi)); });
  return out;
}

std::vector<std::string> catalogue_walks(std::size_t max_order) {
  std::vector<std::string> out;
  for (int n : {2, 3, 4, 5, 6, 11, 12, 31, 64, 101, 257, 1024, 2047}) {
    out.push_back("simple-circle:" + std::to_string(n));
  }
  for (int n = 1; n <= 11; ++n) {
    out.push_back("cube-nn:" + std::to_string(n));
    out.push_back("cube-loops:" + std::to_string(n));
  }
  for (int n = 2; n <= 6; ++n) {
    for (const char* w : {"random-transpositions:", "random-to-top:", "top-to-random:"}) {
      out.push_back(w + std::to_string(n));
    }
    for (int i = 1; i <= n; ++i) out.push_back("urban-step:" + std::to_string(n) + ":" + std::to_string(i));
  }
  for (int n = 2; n <= 12; ++n) out.push_back("heisenberg-gen:" + std::to_string(n));
  std::vector<std::string> kept;
  for (const auto& w : out) {
    if (Group::build(WalkSpec::parse(w).group_descriptor())->order() <= max_order) kept.push_back(w);
  }
  return kept;
}

Outcome criterion1() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  const auto walks = catalogue_walks(2048);
  for (const auto& w : walks) {
    const Measure nu = walk(w);
    const Eigen::MatrixXd P = StochasticOperator::from_measure(nu).matrix();
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(static_cast<Eigen::Index>(nu.size()));
    row(0) = 1.0;
    double gap = 0.0;
    for_each_power(nu, 200, [&](std::size_t k, const Measure& m) {
      if (k > 0) row = row * P;
      for (Eigen::Index i = 0; i < row.size(); ++i) {
        gap = std::max(gap, std::abs(row(i) - m[static_cast<Element>(i)]));
      }
    });
    worst = std::max(worst, gap);
    c.expect(gap <= 1e-10, w + " gap " + fmt(gap));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 60.0, "runtime " + fmt(secs) + " s");
  c.note(std::to_string(walks.size()) + " walks, max gap " + fmt(worst) + ", " + fmt(secs) + " s");
  return c.done();
}

Outcome criterion2() {
  Checker c;
  const auto d = exact_curve(walk("simple-circle:11"), 300);
  double min_lower_slack = 1.0, min_upper_slack = 1.0;
  for (std::size_t k = 0; k <= 300; ++k) {
    const auto b = circle_bounds(11, static_cast<double>(k));
    c.expect(b.lower.has_value() && *b.lower <= d[k] + 1e-9, "lower at k=" + std::to_string(k));
    if (b.lower) min_lower_slack = std::min(min_lower_slack, d[k] - *b.lower);
    if (k >= 4) {
      c.expect(b.upper.has_value() && d[k] <= *b.upper + 1e-9, "upper at k=" + std::to_string(k));
      if (b.upper) min_upper_slack = std::min(min_upper_slack, *b.upper - d[k]);
    }
  }
  c.note("min slack lower " + fmt(min_lower_slack) + ", upper " + fmt(min_upper_slack));
  return c.done();
}

Outcome criterion3() {
  Checker c;
  double worst_ratio = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const Measure nu = walk("cube-nn:" + std::to_string(n));
    const auto d = exact_curve(nu, 60);
    for (double cc : {0.5, 1.0, 2.0, 4.0}) {
      const auto u = cube_upper(n, cc);
      const auto k = static_cast<std::size_t>(std::ceil(u.k));
      const double sq = d[k] * d[k];
      worst_ratio = std::max(worst_ratio, sq / u.bound);
      c.expect(sq <= u.bound, "n=" + std::to_string(n) + " c=" + fmt(cc));
    }
  }
  c.note("max exact^2/bound " + fmt(worst_ratio));
  return c.done();
}

Outcome criterion4() {
  Checker c;
  std::mt19937 rng(4);
  std::normal_distribution<double> z;
  double worst = 0.0;
  const char* groups[] = {"cyclic:2", "cyclic:5", "cyclic:12", "cyclic:64", "cube:1",
                          "cube:3",   "cube:6",   "quaternion", "dihedral:4"};
  for (const char* d : groups) {
    const auto g = Group::build(d);
    const IrrepCatalog cat = irrep_catalog(g);
    c.expect(cat.sum_dim_squared() == g->order(), std::string(d) + " sum d^2");
    double inv = 0.0, plan = 0.0, conv = 0.0;
    for (int t = 0; t < 100; ++t) {
      GroupFunction f(g->order()), h(g->order());
      for (auto& x : f) x = Complex(z(rng), z(rng));
      for (auto& x : h) x = Complex(z(rng), z(rng));
      const auto back = fourier_inversion(cat, fourier_coefficients(f, cat));
      for (std::size_t i = 0; i < f.size(); ++i) inv = std::max(inv, std::abs(back[i] - f[i]));
      plan = std::max(plan, plancherel_check(f, h, cat));
      conv = std::max(conv, convolution_theorem_check(f, h, cat));
    }
    c.expect(inv <= 1e-10, std::string(d) + " inversion " + fmt(inv));
    c.expect(plan <= 1e-10, std::string(d) + " Plancherel " + fmt(plan));
    c.expect(conv <= 1e-10, std::string(d) + " convolution " + fmt(conv));
    worst = std::max({worst, inv, plan, conv});
    const Measure pi = uniform(g);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (i == cat.trivial_index()) continue;
      const double m = fourier_transform(pi, cat.reps[i]).cwiseAbs().maxCoeff();
      c.expect(m <= 1e-12, std::string(d) + " uniform transform " + fmt(m));
    }
  }
  c.note("max round-trip error " + fmt(worst));
  return c.done();
}

Outcome criterion5() {
  Checker c;
  const auto sorted_real = [](const Spectrum& s) {
    std::vector<double> v;
    for (const auto& z : s.eigenvalues) v.push_back(z.real());
    std::sort(v.begin(), v.end());
    return v;
  };
  double worst = 0.0;
  for (int n : {3, 5, 7, 11, 12, 31, 64}) {
    const auto got = sorted_real(spectrum(StochasticOperator::from_measure(walk("simple-circle:" + std::to_string(n)))));
    std::vector<double> want;
    for (int j = 0; j < n; ++j) want.push_back(std::cos(2.0 * std::numbers::pi * j / n));
    std::sort(want.begin(), want.end());
    double gap = 0.0;
    for (int j = 0; j < n; ++j) gap = std::max(gap, std::abs(got[j] - want[j]));
    worst = std::max(worst, gap);
    c.expect(gap <= 1e-10, "circle n=" + std::to_string(n));
  }
  for (int n = 1; n <= 9; ++n) {
    const Measure nu = walk("cube-nn:" + std::to_string(n));
    const auto got = sorted_real(spectrum(StochasticOperator::from_measure(nu)));
    std::vector<double> want;
    for (Element s = 0; s < nu.size(); ++s) want.push_back(1.0 - 2.0 * weight(nu.group(), s) / (n + 1.0));
    std::sort(want.begin(), want.end());
    double gap = 0.0;
    for (std::size_t j = 0; j < want.size(); ++j) gap = std::max(gap, std::abs(got[j] - want[j]));
    worst = std::max(worst, gap);
    c.expect(gap <= 1e-10, "cube n=" + std::to_string(n));
  }
  double worst_mean = 0.0;
  for (const auto& w : catalogue_walks(1024)) {
    const Measure nu = walk(w);
    const double gap = std::abs(spectrum(StochasticOperator::from_measure(nu)).mean_real() - nu[0]);
    worst_mean = std::max(worst_mean, gap);
    c.expect(gap <= 1e-9, w + " eigenvalue mean");
  }
  c.note("max eigenvalue gap " + fmt(worst) + ", max mean gap " + fmt(worst_mean));
  return c.done();
}

Outcome criterion6() {
  Checker c;
  std::vector<Measure> walks;
  for (int n : {3, 5, 7, 11, 12, 31}) walks.push_back(walk("simple-circle:" + std::to_string(n)));
  for (int n = 1; n <= 8; ++n) {
    walks.push_back(walk("cube-nn:" + std::to_string(n)));
    walks.push_back(walk("cube-loops:" + std::to_string(n)));
  }
  for (const char* d : {"quaternion", "dihedral:4"}) {
    const auto g = Group::build(d);
    std::vector<double> w(g->order(), 0.0);
    w[0] = 0.2;
    for (Element s : g->generators()) {
      w[s] += 0.2;
      w[g->inv(s)] += 0.2;
    }
    walks.push_back(Measure::probability(g, w));
  }
  double tightest = kInfinity;
  for (const Measure& nu : walks) {
    const UpperBoundLemma ubl(nu, irrep_catalog(nu.group_ptr()));
    const auto d = exact_curve(nu, 200);
    for (std::size_t k = 0; k <= 200; ++k) {
      const double b = ubl(k);
      // Below ~1e-14 the computed distance is rounding noise in the convolution.
      c.expect(d[k] <= std::sqrt(b) * (1.0 + 1e-12) + 1e-14,
               nu.group().descriptor().to_string() + " k=" + std::to_string(k));
      if (d[k] > 1e-12) tightest = std::min(tightest, b - d[k] * d[k]);
    }
  }
  c.note(std::to_string(walks.size()) + " walks, min slack " + fmt(tightest));
  return c.done();
}

Outcome criterion7() {
  Checker c;
  for (const auto& r : appendix_inequality_suite()) {
    c.expect(r.passed, r.name + " slack " + fmt(r.min_slack));
    c.note(r.name + " " + fmt(r.min_slack));
  }
  return c.done();
}

Outcome criterion8() {
  Checker c;
  const auto cube = cutoff_scan([](int n) { return WalkSpec{WalkName::kCubeNearestNeighbour, n, 0}; },
                                {4, 6, 8, 10},
                                [](int n) { return n * std::log(static_cast<double>(n)) / 4.0; }, {0.5});
  c.expect(cube.post_strictly_decreasing[0], "cube post not strictly decreasing");
  c.expect(cube.pre_strictly_increasing[0], "cube pre not strictly increasing");
  c.expect(cube.rows.back().post[0] < 0.25, "cube post at n=10 " + fmt(cube.rows.back().post[0]));
  c.expect(cube.rows.back().pre[0] > 0.75, "cube pre at n=10 " + fmt(cube.rows.back().pre[0]));
  const auto circle = cutoff_scan([](int n) { return WalkSpec{WalkName::kSimpleCircle, n, 0}; },
                                  {9, 11, 13, 15, 17, 19}, [](int n) { return static_cast<double>(n * n); },
                                  {0.5});
  c.expect(circle.pre_spread[0] < 0.15, "circle pre spread " + fmt(circle.pre_spread[0]));
  c.expect(circle.post_spread[0] < 0.15, "circle post spread " + fmt(circle.post_spread[0]));
  c.note("cube n=10 pre " + fmt(cube.rows.back().pre[0]) + " post " + fmt(cube.rows.back().post[0]) +
         ", circle spreads " + fmt(circle.pre_spread[0]) + "/" + fmt(circle.post_spread[0]));
  return c.done();
}

Outcome criterion9() {
  Checker c;
  const double e = default_epsilon();
  const auto cube = finitary_cutoff(distance_curve(WalkSpec{WalkName::kCubeNearestNeighbour, 10, 0}, 200).variation, e, e);
  const auto circle = finitary_cutoff(distance_curve(WalkSpec{WalkName::kSimpleCircle, 31, 0}, 2000).variation, e, e);
  c.expect(cube.q > 2.0 * circle.q, "q cube " + fmt(cube.q) + " vs circle " + fmt(circle.q));
  c.note("q(cube 10) " + fmt(cube.q) + ", q(circle 31) " + fmt(circle.q));
  return c.done();
}

Outcome criterion10() {
  Checker c;
  constexpr std::size_t trials = 100000;
  const SimulationOptions opts{20240601, 2};
  {
    const auto s = random_to_top_sut(5, trials, opts);
    const auto d = exact_curve(walk("random-to-top:5"), 60);
    for (std::size_t k = 0; k <= 60; ++k) {
      const double kk = static_cast<double>(k);
      c.expect(d[k] <= s.time.exceedance(kk) + 3.0 * s.time.exceedance_stderr(kk),
               "random-to-top k=" + std::to_string(k));
    }
  }
  {
    const auto s = cube_coupling(4, trials, opts);
    const auto d = exact_curve(walk("cube-loops:4"), 80);
    for (std::size_t k = 0; k <= 80; ++k) {
      const double kk = static_cast<double>(k);
      c.expect(d[k] <= s.time.exceedance(kk) + 3.0 * s.time.exceedance_stderr(kk),
               "coupling k=" + std::to_string(k));
    }
    c.expect(s.p_value > 0.001, "coupling marginal p " + fmt(s.p_value));
  }
  {
    const auto s = coupon_collector(20, trials, opts);
    const double k = coupon_collector_bound(20, 1.0).k;
    c.expect(s.exceedance(k) <= std::exp(-1.0) + 3.0 * s.exceedance_stderr(k), "coupon tail");
    c.note("coupon P(T>k) " + fmt(s.exceedance(k)));
  }
  {
    const Measure nu = walk("cube-nn:4");
    const auto r = switzer_game(convolution_power(nu, 3), uniform(nu.group_ptr()), trials, opts);
    c.expect(std::abs(r.win_rate - r.predicted) <= 3.0 * r.stderr_,
             "Switzer " + fmt(r.win_rate) + " vs " + fmt(r.predicted));
    c.note("Switzer " + fmt(r.win_rate) + " vs " + fmt(r.predicted));
  }
  {
    const auto v = visits_before_return(walk("simple-circle:5"), 2, trials, opts);
    c.expect(v.censored == 0, "censored runs");
    c.expect(std::abs(v.diff_mean) <= 3.0 * v.diff_stderr, "visits ratio " + fmt(v.ratio));
    c.note("visits ratio " + fmt(v.ratio));
  }
  return c.done();
}

Outcome criterion11() {
  Checker c;
  for (int n : {4, 5}) {
    const auto f = check_factorization(urban_factors(n));
    c.expect(f.exact, "Urban S" + std::to_string(n) + " deviation " + fmt(f.deviation));
    for (const auto& nu : urban_factors(n)) {
      c.expect(!is_invertible(StochasticOperator::from_measure(nu)).invertible, "urban-step invertible");
    }
  }
  for (int n = 3; n <= 15; n += 2) {
    for (int i = 1; i <= 9; ++i) {
      c.expect(circle_pq_operator(n, i / 10.0).invertibility.invertible,
               "P_p n=" + std::to_string(n) + " p=" + fmt(i / 10.0));
    }
  }
  // The loop walk exactly as stated; its eigenvalue 1 - w/n vanishes at w = n.
  {
    const Measure nu = walk("cube-loops:4");
    const auto op = StochasticOperator::from_measure(nu);
    const auto inv = is_invertible(op);
    c.expect(inv.invertible, "cube-loops:4 singular (smallest singular value " +
                                 fmt(inv.smallest_singular_value) + ")");
    const auto pre = charge_preimage(op, dirac(nu.group_ptr(), 0));
    c.expect(pre.exists && pre.negative_entries > 0, "cube-loops:4 has no charge preimage of the identity");
  }
  // The nearest-neighbour walk with n even, which is invertible.
  {
    const Measure nu = walk("cube-nn:4");
    const auto op = StochasticOperator::from_measure(nu);
    const auto pre = charge_preimage(op, dirac(nu.group_ptr(), 0));
    c.expect(is_invertible(op).invertible, "cube-nn:4 singular");
    c.expect(pre.exists && pre.negative_entries > 0, "cube-nn:4 preimage");
    c.note("cube-nn:4 preimage min entry " + fmt(pre.min_entry));
  }
  // uP = pi: unique solution pi exactly when P is invertible.
  for (const char* w : {"cube-nn:4", "cube-loops:4", "simple-circle:7", "urban-step:4:1",
                        "random-transpositions:4", "top-to-random:4", "heisenberg-gen:3"}) {
    const Measure nu = walk(w);
    const auto op = StochasticOperator::from_measure(nu);
    const bool invertible = is_invertible(op).invertible;
    const auto r = charge_preimage(op, uniform(nu.group_ptr()));
    const bool unique_pi = r.exists && r.unique &&
                           lp_distance(*r.solution, uniform(nu.group_ptr()), kInfinity) <= 1e-9;
    c.expect(unique_pi == invertible, std::string(w) + " uniqueness mismatch");
  }
  return c.done();
}

Outcome criterion12() {
  Checker c;
  const int n = 5;
  const auto curve = distance_curve(WalkSpec{WalkName::kRandomTranspositions, n, 0}, 100);
  const auto tau = mixing_time(curve.variation, {}).tau_default;
  const long centre = static_cast<long>(std::ceil(n * std::log(static_cast<double>(n)) / 2.0));
  c.expect(tau.has_value(), "tau unresolved");
  if (tau) {
    const long t = static_cast<long>(*tau);
    c.expect(t >= centre - n && t <= centre + 3 * n, "tau " + std::to_string(t));
    c.note("tau(1/2e) = " + std::to_string(t) + " in [" + std::to_string(centre - n) + ", " +
           std::to_string(centre + 3 * n) + "]");
  }
  return c.done();
}

Outcome criterion13() {
  Checker c;
  const auto render = [](std::size_t threads) {
    const SimulationOptions opts{7, threads};
    std::ostringstream os;
    write_estimator_csv(os, random_to_top_sut(20, 30000, opts).time, 150);
    write_estimator_csv(os, cube_coupling(6, 30000, opts).time, 80);
    write_estimator_csv(os, coupon_collector(20, 30000, opts), 150);
    const Measure nu = walk("cube-nn:4");
    const auto sw = switzer_game(convolution_power(nu, 3), uniform(nu.group_ptr()), 30000, opts);
    os << fmt(sw.win_rate) << "\n";
    const auto v = visits_before_return(walk("simple-circle:5"), 2, 30000, opts);
    os << v.mean_visits << "," << v.mean_return_time << "," << v.diff_mean << "\n";
    const auto law = empirical_law(walk("random-transpositions:4"), 4, 30000, opts);
    for (double x : law) os << x << ",";
    return os.str();
  };
  const std::string one = render(1);
  c.expect(one == render(2), "1 vs 2 threads");
  c.expect(one == render(8), "1 vs 8 threads");
  c.note(std::to_string(one.size()) + " bytes compared");
  return c.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle pairing", criterion1},
      {"circle sandwich n=11", criterion2},
      {"cube upper bound", criterion3},
      {"Fourier conformance", criterion4},
      {"spectral identities", criterion5},
      {"upper bound lemma dominance", criterion6},
      {"appendix inequality suite", criterion7},
      {"cut-off polarization", criterion8},
      {"finitary cut-off contrast", criterion9},
      {"probabilistic bounds", criterion10},
      {"invertibility and factorization", criterion11},
      {"random transpositions corridor", criterion12},
      {"simulation determinism", criterion13},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
