#include <doctest.h>

#include <algorithm>
#include <random>

#include "rwg/error.hpp"
#include "rwg/group.hpp"

using namespace rwg;

namespace {

const char* const kCatalogue[] = {"cyclic:2",  "cyclic:5",   "cyclic:12",   "cube:1",
                                  "cube:4",    "symmetric:3", "symmetric:5", "dihedral:4",
                                  "quaternion", "heisenberg:3", "heisenberg:5"};

Element at(const Group& g, const char* label) {
  auto e = g.find(label);
  REQUIRE(e.has_value());
  return *e;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("descriptor round trip") {
  for (const char* d : kCatalogue) CHECK(GroupDescriptor::parse(d).to_string() == d);
  CHECK_THROWS_AS(GroupDescriptor::parse("cyclic"), Error);
  CHECK_THROWS_AS(GroupDescriptor::parse("torus:3"), Error);
  CHECK_THROWS_AS(GroupDescriptor::parse("cyclic:0"), Error);
  CHECK_THROWS_AS(GroupDescriptor::parse("symmetric:9"), Error);
}

TEST_CASE("catalogue groups satisfy the axioms") {
  for (const char* d : kCatalogue) {
    CAPTURE(d);
    const auto g = Group::build(d);
    CHECK(g->check_axioms());
    for (Element a = 0; a < g->order(); ++a) {
      CHECK(g->mul(g->identity(), a) == a);
      CHECK(g->mul(a, g->identity()) == a);
      CHECK(g->mul(a, g->inv(a)) == g->identity());
      CHECK(g->find(g->label(a)) == a);
    }
  }
}

TEST_CASE("orders") {
  CHECK(Group::build("heisenberg:3")->order() == 27);
  CHECK(Group::build("symmetric:5")->order() == 120);
  CHECK(Group::build("cube:6")->order() == 64);
  CHECK(Group::build("quaternion")->order() == 8);
  CHECK(Group::build("dihedral:4")->order() == 8);
}

TEST_CASE("cyclic arithmetic") {
  const auto g = Group::build("cyclic:5");
  CHECK(g->mul(3, 4) == 2);
  CHECK(g->inv(2) == 3);
}

TEST_CASE("quaternion relations") {
  const auto q = Group::build("quaternion");
  const Element i = at(*q, "i"), j = at(*q, "j"), k = at(*q, "k"), m1 = at(*q, "-1");
  CHECK(q->mul(i, j) == k);
  CHECK(q->mul(j, i) == at(*q, "-k"));
  CHECK(q->mul(i, i) == m1);
  CHECK(q->mul(j, j) == m1);
  CHECK(q->mul(k, k) == m1);
  CHECK(q->mul(q->mul(i, j), k) == m1);
  for (Element a = 0; a < 8; ++a) CHECK(q->mul(m1, a) == q->mul(a, m1));
}

TEST_CASE("dihedral relations") {
  const auto d = Group::build("dihedral:4");
  const Element r = at(*d, "r1"), s = at(*d, "r0s");
  CHECK(d->mul(d->mul(r, r), d->mul(r, r)) == d->identity());
  CHECK(d->mul(s, s) == d->identity());
  CHECK(d->mul(d->mul(s, r), s) == d->inv(r));
  CHECK_FALSE(d->is_abelian());
}

TEST_CASE("heisenberg product rule") {
  const auto h = Group::build("heisenberg:5");
  const Element a = at(*h, "1.2.3"), b = at(*h, "4.0.2");
  // (a,b,c)(a',b',c') = (a+a', b+b'+a c', c+c')
  CHECK(h->label(h->mul(a, b)) == "0.4.0");
  CHECK_FALSE(h->is_abelian());
}

TEST_CASE("permutation rank is a bijection") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    for (std::uint64_t r = 0; r < fact; ++r) CHECK(permutation_rank(permutation_unrank(r, n)) == r);
  }
}

TEST_CASE("symmetric composition acts on positions") {
  const auto g = Group::build("symmetric:3");
  // (st)(p) = s(t(p))
  for (Element a = 0; a < g->order(); ++a) {
    for (Element b = 0; b < g->order(); ++b) {
      const auto pa = g->permutation(a), pb = g->permutation(b), pab = g->permutation(g->mul(a, b));
      for (int p = 0; p < 3; ++p) CHECK(pab[p] == pa[pb[p]]);
    }
  }
  CHECK(g->label(0) == "123");
}

TEST_CASE("large groups are rule-evaluated") {
  const auto g = Group::build("cube:13");
  CHECK_FALSE(g->has_table());
  CHECK(g->check_axioms());
  CHECK(g->mul(5, 3) == 6);
  CHECK(Group::build("cube:12")->has_table());
}

TEST_CASE("conjugacy classes") {
  const auto q = Group::build("quaternion");
  const auto cq = conjugacy_classes(*q);
  CHECK(cq.size() == 5);
  std::vector<std::size_t> sizes;
  for (const auto& c : cq.classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(cq.class_of(at(*q, "i")) == cq.class_of(at(*q, "-i")));

  const auto s3 = conjugacy_classes(*Group::build("symmetric:3"));
  CHECK(s3.size() == 3);
  sizes.clear();
  for (const auto& c : s3.classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

  for (const char* d : {"cyclic:7", "cube:3", "cyclic:12"}) {
    const auto g = Group::build(d);
    CHECK(conjugacy_classes(*g).size() == g->order());
  }
  CHECK(conjugacy_classes(*Group::build("dihedral:4")).size() == 5);
  CHECK(conjugacy_classes(*Group::build("symmetric:5")).size() == 7);
}

TEST_CASE("conjugacy classes agree with brute force") {
  for (const char* d : {"symmetric:4", "heisenberg:3", "dihedral:4"}) {
    const auto g = Group::build(d);
    const auto cp = conjugacy_classes(*g);
    for (Element a = 0; a < g->order(); ++a) {
      for (Element t = 0; t < g->order(); ++t) {
        CHECK(cp.class_of(a) == cp.class_of(g->mul(g->mul(t, a), g->inv(t))));
      }
    }
  }
}

TEST_CASE("generated subgroups") {
  const auto c6 = Group::build("cyclic:6");
  CHECK(generated_subgroup(*c6, SupportSet({2})) == SupportSet({0, 2, 4}));
  const auto c5 = Group::build("cyclic:5");
  CHECK(generated_subgroup(*c5, SupportSet({1})).size() == 5);

  const auto s4 = Group::build("symmetric:4");
  std::vector<Element> adjacent;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> p{0, 1, 2, 3};
    std::swap(p[i], p[i + 1]);
    adjacent.push_back(s4->from_permutation(p));
  }
  CHECK(generated_subgroup(*s4, SupportSet(adjacent)).size() == 24);
}

TEST_CASE("generated subgroups are closed") {
  std::mt19937 rng(11);
  for (const char* d : {"symmetric:4", "heisenberg:3", "quaternion", "cube:4", "cyclic:12"}) {
    const auto g = Group::build(d);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Element> picks{static_cast<Element>(rng() % g->order())};
      if (trial % 2) picks.push_back(static_cast<Element>(rng() % g->order()));
      const SupportSet h = generated_subgroup(*g, SupportSet(picks));
      CHECK(g->order() % h.size() == 0);
      for (Element a : h.elements()) {
        CHECK(h.contains(g->inv(a)));
        for (Element b : h.elements()) CHECK(h.contains(g->mul(a, b)));
      }
    }
  }
}

}
