#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mincan/minimage.hpp"
#include "mincan/oracle.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("worked example") {
  auto g = ex26();
  auto s = set1(6, {2, 3, 5});

  // the coset representatives chosen by hand, and the six images they give
  const char* reps[] = {"()", "(1,6,2)", "(1,4,6,5,2,3)", "(1,4)(2,3)(5,6)", "(1,4,2,3,6,5)", "(1,2,6)"};
  const std::vector<PointSet> images{set1(6, {2, 3, 5}), set1(6, {1, 3, 5}), set1(6, {1, 2, 3}),
                                     set1(6, {2, 3, 6}), set1(6, {1, 3, 6}), set1(6, {3, 5, 6})};
  for (std::size_t i = 0; i < 6; ++i) {
    auto r = cyc(reps[i], 6);
    CHECK(g.contains(r));
    CHECK(act_set(r, s) == images[i]);
  }

  auto nat = minimal_image(g, s, BaseOrdering::natural(6));
  CHECK(nat.image == set1(6, {1, 2, 3}));
  CHECK(act_set(nat.witness, s) == nat.image);
  CHECK(g.contains(nat.witness));
  CHECK(nat.solved());

  auto rev = minimal_image(g, s, BaseOrdering::reverse(6));
  CHECK(rev.image == set1(6, {4, 5, 6}));
  CHECK(act_set(rev.witness, s) == rev.image);
  CHECK(g.contains(rev.witness));
  // the reverse search needs more levels than the natural one
  CHECK(rev.stats.depth >= nat.stats.depth);
}

TEST_CASE("degenerate inputs") {
  auto s = set1(5, {2, 4});
  auto r = minimal_image(PermGroup(5), s, BaseOrdering::reverse(5));
  CHECK(r.image == s);
  CHECK(r.witness.is_identity());

  auto e = minimal_image(ex26(), PointSet(6), BaseOrdering::natural(6));
  CHECK(e.image.empty());
  CHECK(e.witness.is_identity());
  CHECK(e.stats.nodes == 1);

  CHECK_THROWS_AS(minimal_image(ex26(), set1(5, {1}), BaseOrdering::natural(6)), std::invalid_argument);
}

TEST_CASE("node budget") {
  auto g = grid_group(6);
  auto s = random_subset(36, 18, 4);
  auto full = minimal_image(g, s, BaseOrdering::natural(36));
  REQUIRE(full.stats.nodes > 10);
  auto cut = minimal_image(g, s, BaseOrdering::natural(36), {10, true});
  CHECK_FALSE(cut.solved());
  CHECK(cut.stats.nodes == 10);
  auto exact = minimal_image(g, s, BaseOrdering::natural(36), {full.stats.nodes, true});
  CHECK(exact.solved());
  CHECK(exact.image == full.image);
}

TEST_CASE("agrees with brute force") {
  Xoshiro256 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_small_group(rng);
    auto s = random_set(g.degree(), rng);
    auto ord = random_ordering(g.degree(), rng);
    CAPTURE(trial);
    auto fast = minimal_image(g, s, ord);
    auto slow = brute_min(g, s, ord);
    CHECK(fast.image == slow.image);
    CHECK(act_set(fast.witness, s) == fast.image);
    CHECK(g.contains(fast.witness));

    // same image without candidate merging
    CHECK(minimal_image(g, s, ord, {0, false}).image == fast.image);

    // constant on the orbit
    auto moved = act_set(random_element(g, rng), s);
    CHECK(minimal_image(g, moved, ord).image == fast.image);
  }
}

TEST_CASE("equal minimal images have the same full and empty orbits") {
  Xoshiro256 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_small_group(rng);
    auto s = random_set(g.degree(), rng);
    auto t = act_set(random_element(g, rng), s);
    const auto nat = BaseOrdering::natural(g.degree());
    REQUIRE(brute_min(g, s, nat).image == brute_min(g, t, nat).image);
    for (const auto& o : orbits(g, nat).orbits) {
      auto in_s = set_intersection(o, s).size(), in_t = set_intersection(o, t).size();
      CHECK((in_s == 0) == (in_t == 0));
      CHECK((in_s == o.size()) == (in_t == o.size()));
    }
  }
}

TEST_CASE("cheap_compare") {
  auto g = split10();
  const auto nat = BaseOrdering::natural(10);
  auto s = set1(10, {3, 6, 7}), t = set1(10, {3, 7, 9});
  CHECK(cheap_compare(g, s, t, nat) == Comparison::strictly_less);
  CHECK(cheap_compare(g, t, s, nat) == Comparison::strictly_greater);
  CHECK(set_less(brute_min(g, s, nat).image, brute_min(g, t, nat).image, nat));
  CHECK(cheap_compare(g, s, s, nat) == Comparison::undecided);
  CHECK(cheap_compare(g, s, set1(10, {3}), nat) == Comparison::undecided);

  Xoshiro256 rng(99);
  int decided = 0;
  for (int trial = 0; trial < 5'000 && decided < 100; ++trial) {
    auto h = random_small_group(rng);
    std::size_t k = rng.below(h.degree() + 1);
    auto a = random_subset(h.degree(), k, rng), b = random_subset(h.degree(), k, rng);
    auto ord = random_ordering(h.degree(), rng);
    auto verdict = cheap_compare(h, a, b, ord);
    if (verdict == Comparison::undecided) continue;
    ++decided;
    auto ma = brute_min(h, a, ord).image, mb = brute_min(h, b, ord).image;
    CHECK(set_less(ma, mb, ord) == (verdict == Comparison::strictly_less));
    CHECK(set_less(mb, ma, ord) == (verdict == Comparison::strictly_greater));
  }
  CHECK(decided == 100);
}
