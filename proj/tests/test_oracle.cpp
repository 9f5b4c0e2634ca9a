#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mincan/oracle.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("elements") {
  auto trivial = elements(PermGroup(4));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.front().is_identity());
  CHECK(elements(group_of(3, {"(1,2)", "(1,2,3)"})).size() == 6);

  auto g = ex26();
  auto all = elements(g);
  CHECK(all.size() == g.order());
  CHECK(std::set<Permutation>(all.begin(), all.end()) == closure(g));

  CHECK_THROWS_AS(elements(grid_group(5)), BudgetExceeded);
  CHECK(elements(grid_group(4), {576, 10}).size() == 576);
}

TEST_CASE("brute_min") {
  auto g = ex26();
  auto s = set1(6, {2, 3, 5});
  CHECK(brute_min(g, s, BaseOrdering::natural(6)).image == set1(6, {1, 2, 3}));
  auto rev = brute_min(g, s, BaseOrdering::reverse(6));
  CHECK(rev.image == set1(6, {4, 5, 6}));
  CHECK(act_set(rev.witness, s) == rev.image);
  CHECK(brute_min(PermGroup(6), s, BaseOrdering::reverse(6)).image == s);
}

TEST_CASE("set_orbit") {
  auto s = set1(5, {1, 4});
  CHECK(set_orbit(PermGroup(5), s) == std::vector<PointSet>{s});
  CHECK(set_orbit(group_of(3, {"(1,2)"}), set1(3, {1, 3})) ==
        std::vector<PointSet>{set1(3, {1, 3}), set1(3, {2, 3})});
  CHECK_THROWS_AS(set_orbit(grid_group(6), random_subset(36, 18, 1), {10'000, 50}), BudgetExceeded);

  // both oracles agree: the orbit is the set of images under all elements
  Xoshiro256 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_small_group(rng);
    auto t = random_set(g.degree(), rng);
    auto orbit = set_orbit(g, t);
    CHECK(g.order() % orbit.size() == 0);
    std::set<std::vector<int>> a, b;
    for (const auto& x : orbit) a.insert(x.one_based());
    for (const auto& e : elements(g)) b.insert(act_set(e, t).one_based());
    CHECK(a == b);
    CHECK(a.size() == orbit.size());
  }
}

TEST_CASE("canonical contract") {
  auto s = set1(6, {2, 5});
  CHECK(check_canonical_contract(PermGroup(6), s, parse_strategy("minorbit")).passed());

  auto g = grid_group(4);
  auto t = random_subset(16, 8, 2024);
  for (const auto& strategy : named_strategies()) {
    CAPTURE(strategy_name(strategy));
    auto report = check_canonical_contract(g, t, strategy);
    CHECK(report.passed());
    CHECK(report.orbit_size > 0);
    CHECK(report.checked == report.orbit_size);
  }

  // negative controls
  Labeller identity = [](const PermGroup& h, const PointSet& x) {
    return MinResult{x, Permutation::identity(h.degree()), {}, SearchOutcome::solved};
  };
  auto bad = check_canonical_contract(g, t, identity);
  CHECK_FALSE(bad.passed());
  CHECK(bad.violation_count > 0);
  CHECK(bad.violations.size() == std::min<std::size_t>(10, bad.violation_count));
  CHECK(bad.violations.front().kind == "not-invariant");

  Labeller outside = [](const PermGroup& h, const PointSet& x) {
    PointSet y(h.degree(), std::vector<Point>(x.begin(), x.end() - 1));
    return MinResult{y, Permutation::identity(h.degree()), {}, SearchOutcome::solved};
  };
  auto worse = check_canonical_contract(g, t, outside);
  CHECK_FALSE(worse.passed());
  CHECK(worse.violations.front().kind == "bad-witness");

  // sampled when the orbit exceeds the budget
  auto sampled = check_canonical_contract(grid_group(6), random_subset(36, 18, 5), parse_strategy("rareorbitplusmin"),
                                          40, {10'000, 100});
  CHECK(sampled.passed());
  CHECK(sampled.orbit_size == 0);
  CHECK(sampled.checked == 41);
}
