#include "mincan/canimage.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <unordered_map>

#include "mincan/ordering.hpp"

namespace mincan {

namespace {

using Clock = std::chrono::steady_clock;

struct NamedStrategy {
  std::string_view name;
  Strategy strategy;
};

constexpr std::array<NamedStrategy, 10> kStrategyNames{{
    {"minorbit", {Selector::min_orbit, Refiner::fixed_points_only}},
    {"maxorbit", {Selector::max_orbit, Refiner::fixed_points_only}},
    {"rareorbit", {Selector::rare_orbit, Refiner::fixed_points_only}},
    {"commonorbit", {Selector::common_orbit, Refiner::fixed_points_only}},
    {"rareratioorbit", {Selector::rare_ratio_orbit, Refiner::fixed_points_only}},
    {"commonratioorbit", {Selector::common_ratio_orbit, Refiner::fixed_points_only}},
    {"rareorbitplusmin", {Selector::rare_orbit, Refiner::plus_min}},
    {"rareorbitplusrare", {Selector::rare_orbit, Refiner::plus_rare}},
    {"rareorbitpluscommon", {Selector::rare_orbit, Refiner::plus_common}},
    {"singlemaxorbit", {Selector::single_max_orbit, Refiner::fixed_points_only}},
}};

const std::array<Strategy, 9> kNamed = [] {
  std::array<Strategy, 9> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = kStrategyNames[i].strategy;
  return out;
}();

Point min_member(const PointSet& orbit, const BaseOrdering& ord) {
  Point best = orbit.members().front();
  for (Point x : orbit)
    if (ord.less(x, best)) best = x;
  return best;
}

std::optional<Point> select_from(Selector selector, const OrbitList& list, const CandidateList& cands,
                                 const BaseOrdering& ord) {
  const std::size_t m = list.orbits.size();
  const bool weighted = selector == Selector::rare_orbit || selector == Selector::common_orbit ||
                        selector == Selector::rare_ratio_orbit ||
                        selector == Selector::common_ratio_orbit;
  std::vector<bool> meets(m, false);
  std::vector<BigInt> weight(weighted ? m : 0);
  std::vector<std::uint32_t> local(m, 0);
  std::vector<std::uint32_t> touched;
  for (const auto& c : cands) {
    for (Point x : c.set) {
      auto o = list.orbit_of[x];
      if (local[o]++ == 0) touched.push_back(o);
    }
    for (auto o : touched) {
      meets[o] = true;
      if (weighted) weight[o] += c.multiplicity * local[o];
      local[o] = 0;
    }
    touched.clear();
  }

  std::optional<std::size_t> best;
  double best_ratio = 0;
  for (std::size_t o = 0; o < m; ++o) {
    const std::size_t size = list.orbits[o].size();
    if (size < 2) continue;
    if (selector != Selector::single_max_orbit && !meets[o]) continue;
    if (!best) {
      best = o;
      if (selector == Selector::rare_ratio_orbit || selector == Selector::common_ratio_orbit)
        best_ratio = std::log(weight[o].convert_to<double>()) / static_cast<double>(size);
      continue;
    }
    const std::size_t best_size = list.orbits[*best].size();
    bool better = false;
    switch (selector) {
      case Selector::min_orbit:
        better = size < best_size;
        break;
      case Selector::max_orbit:
      case Selector::single_max_orbit:
        better = size > best_size;
        break;
      case Selector::rare_orbit:
        better = weight[o] < weight[*best];
        break;
      case Selector::common_orbit:
        better = weight[o] > weight[*best];
        break;
      case Selector::rare_ratio_orbit:
      case Selector::common_ratio_orbit: {
        double ratio = std::log(weight[o].convert_to<double>()) / static_cast<double>(size);
        better = selector == Selector::rare_ratio_orbit ? ratio < best_ratio : ratio > best_ratio;
        if (better) best_ratio = ratio;
        break;
      }
    }
    if (better) best = o;
  }
  if (!best) return std::nullopt;
  return min_member(list.orbits[*best], ord);
}

// Orbit refinement: keeps the candidates whose orbit-count vector equals the
// one chosen by the refiner.
void refine_by_orbit_counts(Refiner refiner, const OrbitList& list, CandidateList& cands) {
  if (refiner == Refiner::fixed_points_only || cands.size() < 2) return;
  std::vector<OrbCountVector> counts;
  counts.reserve(cands.size());
  std::map<OrbCountVector, BigInt> frequency;
  for (const auto& c : cands) {
    counts.push_back(orbcount(list, c.set));
    frequency[counts.back()] += c.multiplicity;
  }
  auto target = frequency.begin();
  for (auto it = frequency.begin(); it != frequency.end(); ++it) {
    if (refiner == Refiner::plus_rare && it->second < target->second) target = it;
    if (refiner == Refiner::plus_common && it->second > target->second) target = it;
  }
  CandidateList kept;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (counts[i] == target->first) kept.push_back(std::move(cands[i]));
  cands = std::move(kept);
}

std::vector<Point> sorted_by_rank(std::vector<Point> points, const BaseOrdering& ord) {
  std::sort(points.begin(), points.end(), [&](Point a, Point b) { return ord.less(a, b); });
  return points;
}

std::vector<bool> fixed_bitmap(const PermGroup& group) {
  std::vector<bool> fixed(group.degree(), false);
  for (Point x : group.fixed_points()) fixed[x] = true;
  return fixed;
}

const WeightedCandidate& least_candidate(const CandidateList& cands, const BaseOrdering& ord) {
  const WeightedCandidate* best = &cands.front();
  for (const auto& c : cands)
    if (set_less(c.set, best->set, ord) || (c.set == best->set && c.elt < best->elt)) best = &c;
  return *best;
}

}  // namespace

Strategy parse_strategy(std::string_view name) {
  for (const auto& entry : kStrategyNames)
    if (entry.name == name) return entry.strategy;
  throw DomainError("unknown strategy '" + std::string(name) + "'");
}

std::string strategy_name(const Strategy& strategy) {
  for (const auto& entry : kStrategyNames)
    if (entry.strategy == strategy) return std::string(entry.name);
  return "custom";
}

std::span<const Strategy> named_strategies() { return kNamed; }

OrbCountVector orbcount(const OrbitList& orbits, const PointSet& set) {
  OrbCountVector v;
  v.counts.assign(orbits.orbits.size(), 0);
  for (Point x : set) ++v.counts[orbits.orbit_of[x]];
  return v;
}

OrbCountVector orbcount(const PermGroup& group, const PointSet& set, const BaseOrdering& ord) {
  return orbcount(orbits(group, ord), set);
}

void merge_duplicates(CandidateList& list) {
  std::unordered_map<PointSet, std::size_t, PointSetHash> seen;
  CandidateList unique;
  unique.reserve(list.size());
  for (auto& c : list) {
    auto [it, inserted] = seen.try_emplace(c.set, unique.size());
    if (inserted) {
      unique.push_back(std::move(c));
      continue;
    }
    auto& kept = unique[it->second];
    kept.multiplicity += c.multiplicity;
    if (c.elt < kept.elt) kept.elt = std::move(c.elt);
  }
  list = std::move(unique);
}

std::optional<Point> select_point(Selector selector, const PermGroup& group,
                                  const CandidateList& list, const BaseOrdering& ord) {
  if (group.is_trivial()) throw std::invalid_argument("select_point: trivial group");
  return select_from(selector, orbits(group, ord), list, ord);
}

CandidateList expand(const CandidateList& list, const ChainLevel& level) {
  CandidateList out;
  out.reserve(list.size() * level.orbit.size());
  for (const auto& c : list)
    for (Point y : level.orbit) {
      const Permutation& q = level.from(y);
      out.push_back({act_set(q, c.set), compose(c.elt, q), c.multiplicity});
    }
  return out;
}

CandidateList refine(Refiner refiner, const PermGroup& group, const CandidateList& expanded,
                     const BaseOrdering& ord) {
  if (expanded.empty()) return {};
  const PointSet fixed_set = group.fixed_points();
  auto fixed = sorted_by_rank(std::vector<Point>(fixed_set.begin(), fixed_set.end()), ord);
  std::vector<std::vector<bool>> keys;
  keys.reserve(expanded.size());
  for (const auto& c : expanded) {
    std::vector<bool> key;
    key.reserve(fixed.size());
    for (Point f : fixed) key.push_back(c.set.contains(f));
    keys.push_back(std::move(key));
  }
  // members of a fixed point sort first, so the first cell has the greatest key
  const auto& best = *std::max_element(keys.begin(), keys.end());
  CandidateList kept;
  for (std::size_t i = 0; i < expanded.size(); ++i)
    if (keys[i] == best) kept.push_back(expanded[i]);
  refine_by_orbit_counts(refiner, orbits(group, ord), kept);
  merge_duplicates(kept);
  return kept;
}

MinResult canonical_image(const PermGroup& group, const PointSet& set, const Strategy& strategy,
                          const BaseOrdering& ord, const SearchOptions& options) {
  const auto start = Clock::now();
  const std::size_t n = group.degree();
  if (set.degree() != n || ord.degree() != n)
    throw std::invalid_argument("canonical_image: degree mismatch");

  MinResult result;
  result.stats.nodes = 1;
  CandidateList cands{{set, Permutation::identity(n), 1}};

  PermGroup current = group;
  std::vector<bool> fixed = fixed_bitmap(current);
  std::vector<char> member(n, 0);
  std::vector<char> key, best_key;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> survivors;

  while (!set.empty() && !current.is_trivial()) {
    auto beta = select_from(strategy.selector, orbits(current, ord), cands, ord);
    // Every candidate is a union of orbits; further branching cannot separate them.
    if (!beta) break;

    PermGroup based = current.rebased(*beta);
    const ChainLevel& level = based.chain().front();
    PermGroup stabilizer = based.first_level_stabilizer();
    std::vector<bool> next_fixed = fixed_bitmap(stabilizer);
    std::vector<Point> new_fixed;
    for (Point x = 0; x < n; ++x)
      if (next_fixed[x] && !fixed[x]) new_fixed.push_back(x);
    new_fixed = sorted_by_rank(std::move(new_fixed), ord);

    // Candidates already agree on the old fixed points, so the point
    // refinement is decided by the new ones. x lies in set^q, where q maps y
    // to the base point, iff x^(q^-1) lies in set.
    survivors.clear();
    bool have_best = false;
    key.resize(new_fixed.size());
    for (std::uint32_t ci = 0; ci < cands.size(); ++ci) {
      for (Point x : cands[ci].set) member[x] = 1;
      for (std::uint32_t yi = 0; yi < level.orbit.size(); ++yi) {
        const Permutation& t = level.transversal[yi];
        for (std::size_t f = 0; f < new_fixed.size(); ++f) key[f] = member[t[new_fixed[f]]];
        if (!have_best || key > best_key) {
          best_key = key;
          have_best = true;
          survivors.clear();
        }
        if (key == best_key) survivors.emplace_back(ci, yi);
      }
      for (Point x : cands[ci].set) member[x] = 0;
    }

    if (options.node_budget != 0 && result.stats.nodes + survivors.size() > options.node_budget) {
      result.image = set;
      result.witness = Permutation::identity(n);
      result.stats.nodes = options.node_budget;
      result.outcome = SearchOutcome::timeout;
      result.stats.elapsed = Clock::now() - start;
      return result;
    }
    result.stats.nodes += survivors.size();

    CandidateList next;
    next.reserve(survivors.size());
    for (auto [ci, yi] : survivors) {
      const Permutation& q = level.inverse_transversal[yi];
      next.push_back({act_set(q, cands[ci].set), compose(cands[ci].elt, q), cands[ci].multiplicity});
    }
    if (strategy.refiner != Refiner::fixed_points_only)
      refine_by_orbit_counts(strategy.refiner, orbits(stabilizer, ord), next);
    merge_duplicates(next);

    cands = std::move(next);
    current = std::move(stabilizer);
    fixed = std::move(next_fixed);
    ++result.stats.depth;
  }

  const auto& best = least_candidate(cands, ord);
  result.image = best.set;
  result.witness = best.elt;
  result.stats.elapsed = Clock::now() - start;
  return result;
}

}  // namespace mincan
