#include <doctest.h>

#include <algorithm>

#include "rwg/error.hpp"
#include "rwg/factorize.hpp"
#include "rwg/walks.hpp"

using namespace rwg;

TEST_SUITE("factorize") {

TEST_CASE("Urban factorization is exact") {
  for (int n : {4, 5}) {
    const auto factors = urban_factors(n);
    CHECK(factors.size() == static_cast<std::size_t>(n - 1));
    const auto r = check_factorization(factors);
    CHECK(r.exact);
    CHECK(r.deviation <= 1e-12);
  }
  const auto pi = uniform(Group::build("quaternion"));
  CHECK(check_factorization({pi}).exact);
  CHECK_FALSE(check_factorization({driving_measure(WalkSpec::parse("cube-nn:3"))}).exact);
  CHECK_THROWS_AS(check_factorization({pi, uniform(Group::build("cyclic:8"))}), Error);
  CHECK_THROWS_AS(check_factorization({}), Error);
}

TEST_CASE("reversed Urban order on S4") {
  // Each factor is symmetric; the reversed product is the reflection of the forward one.
  auto factors = urban_factors(4);
  std::reverse(factors.begin(), factors.end());
  const auto r = check_factorization(factors);
  CHECK(r.exact);
}

TEST_CASE("exact factorizations need a singular factor") {
  for (const auto& f : urban_factors(5)) {
    CHECK_FALSE(is_invertible(StochasticOperator::from_measure(f)).invertible);
  }
}

TEST_CASE("circle P_p") {
  CHECK(circle_pq_operator(5, 0.5).invertibility.invertible);
  CHECK_FALSE(circle_pq_operator(4, 0.5).invertibility.invertible);
  CHECK(circle_pq_operator(7, 0.9).invertibility.invertible);
  for (int n = 3; n <= 15; n += 2) {
    for (int i = 1; i <= 9; ++i) CHECK(circle_pq_operator(n, i / 10.0).invertibility.invertible);
  }
  CHECK_THROWS_AS(circle_pq_operator(5, 1.0), Error);
}

TEST_CASE("charge preimages") {
  // cube-nn:4 is invertible and ergodic: the preimage of the identity is a charge.
  const Measure nu = driving_measure(WalkSpec::parse("cube-nn:4"));
  const auto op = StochasticOperator::from_measure(nu);
  const auto e = charge_preimage(op, dirac(nu.group_ptr(), 0));
  REQUIRE(e.exists);
  CHECK(e.unique);
  CHECK(e.negative_entries > 0);
  CHECK(e.solution->mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lp_distance(op.apply(*e.solution), dirac(nu.group_ptr(), 0), kInfinity) <= 1e-9);

  const auto p = charge_preimage(op, uniform(nu.group_ptr()));
  REQUIRE(p.exists);
  CHECK(p.unique);
  CHECK(lp_distance(*p.solution, uniform(nu.group_ptr()), kInfinity) <= 1e-9);

  // The loop walk is singular: the identity has no preimage, uniform has many.
  const Measure loops = driving_measure(WalkSpec::parse("cube-loops:2"));
  const auto lop = StochasticOperator::from_measure(loops);
  CHECK_FALSE(charge_preimage(lop, dirac(loops.group_ptr(), 0)).exists);
  const auto lp = charge_preimage(lop, uniform(loops.group_ptr()));
  CHECK(lp.exists);
  CHECK_FALSE(lp.unique);

  const auto g = Group::build("cyclic:5");
  const auto u = StochasticOperator::from_measure(uniform(g));
  CHECK_FALSE(charge_preimage(u, dirac(g, 0)).exists);
}

TEST_CASE("no finite power reaches uniform") {
  const auto c = no_finite_power_reaches_pi(driving_measure(WalkSpec::parse("simple-circle:5")));
  CHECK(c.certified);
  CHECK(c.checked_up_to > 50);
  CHECK(no_finite_power_reaches_pi(driving_measure(WalkSpec::parse("cube-nn:3"))).certified);
  CHECK_THROWS_AS(no_finite_power_reaches_pi(uniform(Group::build("cyclic:5"))), Error);
  CHECK_THROWS_AS(no_finite_power_reaches_pi(driving_measure(WalkSpec::parse("top-to-random:4"))), Error);
}

}
