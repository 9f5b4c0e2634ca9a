#pragma once
// Shared fixtures and chain-independent oracles for the test suites.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mincan/bench.hpp"
#include "mincan/group.hpp"
#include "mincan/ordering.hpp"
#include "mincan/perm.hpp"
#include "mincan/random.hpp"

namespace testing {

using namespace mincan;

inline Permutation cyc(const char* text, std::size_t n) { return parse_cycles(text, n); }

inline PointSet set1(std::size_t n, std::initializer_list<int> points) {
  return PointSet::from_one_based(n, points);
}

inline PermGroup group_of(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Permutation> ps;
  for (auto g : gens) ps.push_back(parse_cycles(g, n));
  return PermGroup(n, std::move(ps));
}

// G = <(1,4)(2,3)(5,6), (1,2,6)> of the worked example.
inline PermGroup ex26() { return group_of(6, {"(1,4)(2,3)(5,6)", "(1,2,6)"}); }

// <(1,2),(4,5),(5,6),(8,9)> on ten points.
inline PermGroup split10() { return group_of(10, {"(1,2)", "(4,5)", "(5,6)", "(8,9)"}); }

// All products of generators, by breadth-first search; never touches a chain.
inline std::set<Permutation> closure(const PermGroup& g, std::size_t cap = 50'000) {
  std::set<Permutation> seen{Permutation::identity(g.degree())};
  std::vector<Permutation> queue(seen.begin(), seen.end());
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& s : g.generators()) {
      Permutation p = compose(queue[k], s);
      if (seen.insert(p).second) {
        if (seen.size() > cap) throw std::runtime_error("closure cap exceeded");
        queue.push_back(std::move(p));
      }
    }
  return seen;
}

// Least image over an explicit element list, compared by brute set_less.
inline PointSet min_over(const std::set<Permutation>& elts, const PointSet& s, const BaseOrdering& ord) {
  PointSet best = s;
  for (const auto& g : elts) {
    PointSet img = act_set(g, s);
    if (set_less(img, best, ord)) best = img;
  }
  return best;
}

// Set order written straight from the definition: A < B iff A has a point a
// outside B with a <= b for every b in B \ A.
inline bool set_less_by_definition(const PointSet& a, const PointSet& b, const BaseOrdering& ord) {
  for (Point x : a) {
    if (b.contains(x)) continue;
    bool ok = true;
    for (Point y : b)
      if (!a.contains(y) && ord.less(y, x)) ok = false;
    if (ok) return true;
  }
  return false;
}

inline Permutation random_cycle(std::size_t n, std::size_t len, Xoshiro256& rng) {
  Permutation shuffle = random_permutation(n, rng);
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = i;
  for (std::size_t i = 0; i < len; ++i) img[shuffle[static_cast<Point>(i)]] = shuffle[static_cast<Point>((i + 1) % len)];
  return Permutation(std::move(img));
}

// A random group of order at most max_order, drawn from a mix of families.
inline PermGroup random_small_group(Xoshiro256& rng, std::size_t max_order = 10'000) {
  while (true) {
    PermGroup g;
    switch (rng.below(7)) {
      case 0: g = grid_group(2 + rng.below(3)); break;
      case 1: {
        std::size_t n = 4 + rng.below(3), m = 2 + rng.below(2);
        if (m >= n) m = 2;
        g = mset_group(n, m);
        break;
      }
      case 2: {  // cyclic
        std::size_t n = 3 + rng.below(10);
        g = PermGroup(n, {random_cycle(n, n, rng)});
        break;
      }
      case 3: {  // dihedral, conjugated
        std::size_t n = 3 + rng.below(9);
        std::vector<Point> rot(n), refl(n);
        for (Point i = 0; i < n; ++i) {
          rot[i] = static_cast<Point>((i + 1) % n);
          refl[i] = static_cast<Point>((n - i) % n);
        }
        g = PermGroup(n, {Permutation(rot), Permutation(refl)}).conjugate(random_permutation(n, rng));
        break;
      }
      default: {  // sparse random generators
        std::size_t n = 4 + rng.below(8), k = 1 + rng.below(3);
        std::vector<Permutation> gens;
        for (std::size_t i = 0; i < k; ++i) gens.push_back(random_cycle(n, 2 + rng.below(3), rng));
        g = PermGroup(n, std::move(gens));
        break;
      }
    }
    if (g.order() <= max_order) return g;
  }
}

inline BaseOrdering random_ordering(std::size_t n, Xoshiro256& rng) {
  switch (rng.below(3)) {
    case 0: return BaseOrdering::natural(n);
    case 1: return BaseOrdering::reverse(n);
    default: return BaseOrdering(random_permutation(n, rng));
  }
}

inline PointSet random_set(std::size_t n, Xoshiro256& rng) {
  return mincan::random_subset(n, rng.below(n + 1), rng);
}

}  // namespace testing
