#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mincan/oracle.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<int> sequence1(const BaseOrdering& ord) {
  std::vector<int> out;
  for (Point x : ord.sequence()) out.push_back(static_cast<int>(x) + 1);
  return out;
}

}  // namespace

TEST_CASE("set order on the small example") {
  const auto nat = BaseOrdering::natural(7);
  auto A = set1(7, {1, 3, 4}), B = set1(7, {3, 5, 7}), C = set1(7, {3, 6, 7}), D = set1(7, {1, 3}),
       E = set1(7, {2});
  CHECK(set_less(A, B, nat));
  CHECK(set_less(A, C, nat));
  CHECK(set_less(B, C, nat));
  CHECK(set_less(A, D, nat));
  CHECK(set_less(A, E, nat));
  CHECK(set_less(E, B, nat));
  CHECK_FALSE(set_less(B, A, nat));
  CHECK_FALSE(set_less(A, A, nat));
  // not lexicographic across sizes
  CHECK(set_less(set1(7, {1, 2}), set1(7, {1}), nat));
  CHECK_FALSE(set_less(set1(7, {1}), set1(7, {1, 2}), nat));
  CHECK(set_less(set1(7, {1}), PointSet(7), nat));
}

TEST_CASE("min_of_list") {
  const auto nat = BaseOrdering::natural(6);
  std::vector<PointSet> images{set1(6, {2, 3, 5}), set1(6, {1, 3, 5}), set1(6, {1, 2, 3}),
                               set1(6, {2, 3, 6}), set1(6, {1, 3, 6}), set1(6, {3, 5, 6})};
  CHECK(min_of_list(images, nat) == set1(6, {1, 2, 3}));
  CHECK(min_of_list(std::vector<PointSet>{PointSet(6)}, nat).empty());
  CHECK_THROWS_AS(min_of_list(std::vector<PointSet>{}, nat), std::invalid_argument);

  // the sets reached at the last level of the reverse search
  std::vector<PointSet> last{set1(6, {3, 5, 6}), set1(6, {4, 5, 6}), set1(6, {1, 5, 6}), set1(6, {2, 5, 6})};
  CHECK(min_of_list(last, BaseOrdering::reverse(6)) == set1(6, {4, 5, 6}));
}

TEST_CASE("base orderings") {
  auto rev = BaseOrdering::reverse(4);
  CHECK(sequence1(rev) == std::vector<int>{4, 3, 2, 1});
  CHECK(rev.less(3, 0));
  auto seq = BaseOrdering::from_sequence(std::vector<Point>{2, 0, 1});
  CHECK(sequence1(seq) == std::vector<int>{3, 1, 2});
  CHECK(seq.rank(2) == 0);
}

TEST_CASE("fixed orbit orderings") {
  CHECK(sequence1(fixed_min_orbit(PermGroup(4))) == std::vector<int>{1, 2, 3, 4});
  CHECK(sequence1(fixed_min_orbit(group_of(3, {"(1,2)"}))) == std::vector<int>{3, 1, 2});
  auto s = sequence1(fixed_min_orbit(split10()));
  CHECK(std::vector<int>(s.begin(), s.begin() + 3) == std::vector<int>{3, 7, 10});

  CHECK(sequence1(fixed_max_orbit(PermGroup(4))) == std::vector<int>{1, 2, 3, 4});
  CHECK(sequence1(fixed_max_orbit(group_of(3, {"(1,2)"}))) == std::vector<int>{1, 2, 3});
  CHECK(sequence1(fixed_max_orbit(group_of(8, {"(1,4)", "(2,8)", "(5,6)", "(7,8)"}))).front() == 2);

  // both readings give a permutation of the domain
  Xoshiro256 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_small_group(rng);
    for (auto reading : {StabilizerReading::cumulative, StabilizerReading::literal}) {
      auto ord = fixed_min_orbit(g, reading);
      auto seq = ord.sequence();
      CHECK(std::set<Point>(seq.begin(), seq.end()).size() == g.degree());
    }
  }
}

TEST_CASE("parse_ordering") {
  auto g = ex26();
  CHECK(parse_ordering("natural", g).is_natural());
  CHECK(parse_ordering("reverse", g) == BaseOrdering::reverse(6));
  CHECK(parse_ordering("perm:(1,6)", g).rank(5) == 0);
  CHECK(parse_ordering("fixedminorbit", g) == fixed_min_orbit(g));
  CHECK_THROWS_AS(parse_ordering("sideways", g), DomainError);
}

TEST_CASE("transport") {
  auto g = ex26();
  auto s = set1(6, {2, 3, 5});
  auto t = transport(g, s, BaseOrdering::natural(6));
  CHECK(t.set == s);
  CHECK(t.sigma.is_identity());
  CHECK(t.group.order() == g.order());

  // Min(G,S,reverse) through the natural order on the transported problem
  auto rev = BaseOrdering::reverse(6);
  auto tr = transport(g, s, rev);
  auto via = act_set(tr.sigma.inverse(), min_over(closure(tr.group), tr.set, BaseOrdering::natural(6)));
  CHECK(via == set1(6, {4, 5, 6}));
  CHECK(min_over(closure(g), s, rev) == set1(6, {4, 5, 6}));

  Xoshiro256 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_small_group(rng, 2'000);
    auto set = random_set(h.degree(), rng);
    BaseOrdering ord(random_permutation(h.degree(), rng));
    auto moved = transport(h, set, ord);
    CHECK(moved.set.size() == set.size());
    CHECK(moved.group.order() == h.order());
    auto lhs = act_set(moved.sigma.inverse(),
                       min_over(closure(moved.group), moved.set, BaseOrdering::natural(h.degree())));
    CHECK(lhs == min_over(closure(h), set, ord));
  }
}

TEST_CASE("set order properties") {
  Xoshiro256 rng(8);
  for (int trial = 0; trial < 2'000; ++trial) {
    std::size_t n = 1 + rng.below(9);
    auto ord = random_ordering(n, rng);
    auto a = random_set(n, rng), b = random_set(n, rng), c = random_set(n, rng);
    CHECK(set_less(a, b, ord) == set_less_by_definition(a, b, ord));
    int holds = int(set_less(a, b, ord)) + int(set_less(b, a, ord)) + int(a == b);
    CHECK(holds == 1);
    if (set_less(a, b, ord) && set_less(b, c, ord)) CHECK(set_less(a, c, ord));

    if (a.size() == b.size() && a != b) {
      std::vector<Point> ra, rb;
      for (Point x : a) ra.push_back(ord.rank(x));
      for (Point x : b) rb.push_back(ord.rank(x));
      std::sort(ra.begin(), ra.end());
      std::sort(rb.begin(), rb.end());
      CHECK(set_less(a, b, ord) == (ra < rb));
    }

    // a decided prefix decides the whole sets
    std::size_t k = rng.below(n + 1);
    std::vector<Point> prefix(ord.sequence().begin(), ord.sequence().begin() + static_cast<long>(k));
    PointSet p(n, prefix);
    auto ap = set_intersection(a, p), bp = set_intersection(b, p);
    if (ap != bp) CHECK(set_less(a, b, ord) == set_less(ap, bp, ord));
  }
}
