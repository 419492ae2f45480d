#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "rwg/bounds.hpp"
#include "rwg/cutoff.hpp"
#include "rwg/error.hpp"

using namespace rwg;

TEST_SUITE("cutoff") {

TEST_CASE("distance curves") {
  const auto c = distance_curve(WalkSpec::parse("cube-nn:4"), 60);
  CHECK(c.variation.size() == 61);
  CHECK(c.variation[0] == doctest::Approx(1.0 - 1.0 / 16));
  CHECK(c.oracle_checked == 61);
  CHECK(c.oracle_deviation <= 1e-10);
  for (std::size_t k = 1; k < c.variation.size(); ++k) {
    CHECK(c.variation[k] <= c.variation[k - 1] + 1e-12);
    CHECK(c.variation[k] >= 0.0);
  }
  CHECK_THROWS_AS(distance_curve(WalkSpec::parse("simple-circle:4"), 10), Error);
  try {
    distance_curve(WalkSpec::parse("simple-circle:4"), 10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonErgodic);
  }
  try {
    distance_curve(WalkSpec::parse("random-transpositions:8"), 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudget);
  }
}

TEST_CASE("circulant fast path agrees with convolution") {
  for (int n = 3; n <= 51; n += 4) {
    const Measure nu = driving_measure(WalkSpec{WalkName::kSimpleCircle, n, 0});
    for (std::size_t k : {0u, 1u, 5u, 40u}) {
      CHECK(lp_distance(circulant_power(nu, k), convolution_power(nu, k), kInfinity) < 1e-12);
    }
  }
  CHECK_THROWS_AS(circulant_power(driving_measure(WalkSpec::parse("cube-nn:3")), 2), Error);
}

TEST_CASE("mixing times") {
  const auto c = distance_curve(WalkSpec::parse("cube-nn:6"), 80);
  const auto r = mixing_time(c.variation, {0.99, 0.5, 0.25, 0.1, 1e-30});
  CHECK(r.tau.at(0.99) == 0);
  CHECK(r.unresolved == std::vector<double>{1e-30});
  for (const auto& [eps, k] : r.tau) {
    CHECK(c.variation[k] < eps);
    if (k > 0) CHECK(c.variation[k - 1] >= eps);
  }
  REQUIRE(r.tau_default.has_value());
  // c* with (e^{e^{-c}} - 1)/2 = (1/2e)^2
  const double target = std::pow(default_epsilon(), 2);
  const double cstar = -std::log(std::log(1.0 + 2.0 * target));
  CHECK(*r.tau_default <= static_cast<std::size_t>(std::ceil(cube_upper(6, cstar).k)));
  // A zero curve mixes immediately.
  const auto z = mixing_time({0.0, 0.0}, {0.5, 0.1});
  CHECK(z.tau.at(0.5) == 0);
  CHECK(z.tau.at(0.1) == 0);
}

TEST_CASE("finitary cut-off") {
  const auto step = finitary_cutoff({1, 1, 1, 0, 0}, 0.1, 0.1);
  CHECK(step.A_size == 3);
  CHECK(step.B_size == 0);
  CHECK(std::isinf(step.q));
  CHECK_THROWS_AS(finitary_cutoff({1.0, 0.9, 0.5}, 0.1, 0.1), Error);

  const double e = default_epsilon();
  std::vector<double> cube_q, circle_q;
  for (int n = 4; n <= 8; ++n) {
    cube_q.push_back(finitary_cutoff(distance_curve(WalkSpec{WalkName::kCubeNearestNeighbour, n, 0}, 200).variation, e, e).q);
  }
  for (int n = 9; n <= 19; n += 2) {
    circle_q.push_back(finitary_cutoff(distance_curve(WalkSpec{WalkName::kSimpleCircle, n, 0}, 600).variation, e, e).q);
  }
  // Cube: broadly nondecreasing. Circle: bounded.
  CHECK(cube_q.back() >= cube_q.front());
  for (double q : circle_q) CHECK(q < 1.0);
  CHECK(*std::max_element(cube_q.begin(), cube_q.end()) > *std::max_element(circle_q.begin(), circle_q.end()));
}

TEST_CASE("cut-off scans") {
  const auto cube = cutoff_scan([](int n) { return WalkSpec{WalkName::kCubeNearestNeighbour, n, 0}; },
                                {4, 6, 8, 10}, [](int n) { return n * std::log(static_cast<double>(n)) / 4.0; },
                                {0.5});
  // Walsh-Hadamard evaluation of the same distances, computed independently.
  const double pre[] = {0.9375, 0.890625, 0.85546875, 0.9453125};
  const double post[] = {0.3125, 0.30639577259475215, 0.24947745992734893, 0.28786020270159424};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(cube.rows[i].pre[0] == doctest::Approx(pre[i]).epsilon(1e-12));
    CHECK(cube.rows[i].post[0] == doctest::Approx(post[i]).epsilon(1e-12));
  }
  // At these sizes the window is as wide as eps * t_n, so neither sequence is monotone.
  CHECK_FALSE(cube.post_strictly_decreasing[0]);
  CHECK_FALSE(cube.pre_strictly_increasing[0]);

  const auto circle = cutoff_scan([](int n) { return WalkSpec{WalkName::kSimpleCircle, n, 0}; },
                                  {9, 11, 13}, [](int n) { return static_cast<double>(n * n); }, {0.5});
  CHECK(circle.pre_spread[0] < 0.15);
  CHECK(circle.post_spread[0] < 0.15);

  const auto zero = cutoff_scan([](int n) { return WalkSpec{WalkName::kCubeNearestNeighbour, n, 0}; },
                                {3, 5}, [](int) { return 0.0; }, {0.5});
  CHECK(zero.rows[0].pre[0] == doctest::Approx(1.0 - 1.0 / 8));
  CHECK(zero.rows[1].pre[0] == doctest::Approx(1.0 - 1.0 / 32));
  CHECK_THROWS_AS(cutoff_scan([](int n) { return WalkSpec{WalkName::kSimpleCircle, n, 0}; }, {},
                              [](int) { return 1.0; }, {0.5}),
                  Error);
}

TEST_CASE("continuous finitary cut-off") {
  const double half_e = default_epsilon();
  const auto g = continuous_finitary([](double x) { return std::exp(-x); }, half_e, half_e);
  CHECK(g.A == doctest::Approx(-std::log(1.0 - half_e)).epsilon(1e-8));
  CHECK(g.B == doctest::Approx(std::log(2.0 * std::numbers::e)).epsilon(1e-8));
  CHECK(std::abs(g.q - 0.14) <= 0.02);

  const double a = std::exp(-2.0 * std::numbers::e);
  const auto g2 = continuous_finitary([](double x) { return std::exp(-x); }, a, half_e);
  CHECK(g2.q == doctest::Approx(0.00258).epsilon(1e-2));

  // tanh family: q crosses 1 near d = 12.4.
  const auto q_of = [&](double d) {
    return continuous_finitary([d](double x) { return (1.0 - std::tanh(d * (x - 0.5))) / 2.0; }, a, half_e).q;
  };
  double lo = 1.0, hi = 40.0;
  CHECK(q_of(lo) < 1.0);
  CHECK(q_of(hi) > 1.0);
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (q_of(mid) < 1.0 ? lo : hi) = mid;
  }
  CHECK(std::abs(lo - 12.4) <= 0.5);

  CHECK_THROWS_AS(continuous_finitary([](double) { return 1.0; }, 0.1, 0.1), Error);
}

TEST_CASE("random transpositions corridor") {
  const int n = 5;
  const auto c = distance_curve(WalkSpec{WalkName::kRandomTranspositions, n, 0}, 60);
  const auto tau = mixing_time(c.variation, {}).tau_default;
  REQUIRE(tau.has_value());
  const auto centre = static_cast<long>(std::ceil(n * std::log(static_cast<double>(n)) / 2.0));
  CHECK(static_cast<long>(*tau) >= centre - n);
  CHECK(static_cast<long>(*tau) <= centre + 3 * n);
}

TEST_CASE("CSV shapes") {
  std::ostringstream curve, summary;
  const auto c = distance_curve(WalkSpec::parse("simple-circle:3"), 1);
  write_curve_csv(curve, {c});
  CHECK(curve.str().rfind("n,k,distance\n3,0,", 0) == 0);
  write_cutoff_summary_csv(summary, {{3, 2, FinitaryCutoff{0.1, 0.1, 2, 4, 0.5}}, {5, std::nullopt, {}}});
  CHECK(summary.str() == "n,tau,q,A_size,B_size\n3,2,0.5,2,4\n5,,0,0,0\n");
}

}
