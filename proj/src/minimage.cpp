#include "mincan/minimage.hpp"

#include <algorithm>
#include <unordered_map>

#include "mincan/ordering.hpp"

namespace mincan {

namespace {

using Clock = std::chrono::steady_clock;

// Merges equal sets, keeping the witness with the least image table.
void merge_duplicates(std::vector<Candidate>& cands) {
  std::unordered_map<PointSet, std::size_t, PointSetHash> seen;
  std::vector<Candidate> unique;
  unique.reserve(cands.size());
  for (auto& c : cands) {
    auto [it, inserted] = seen.try_emplace(c.set, unique.size());
    if (inserted) {
      unique.push_back(std::move(c));
    } else if (c.elt < unique[it->second].elt) {
      unique[it->second].elt = std::move(c.elt);
    }
  }
  cands = std::move(unique);
}

}  // namespace

MinResult minimal_image(const PermGroup& group, const PointSet& set, const BaseOrdering& ord,
                        const SearchOptions& options) {
  const auto start = Clock::now();
  const std::size_t n = group.degree();
  if (set.degree() != n || ord.degree() != n)
    throw std::invalid_argument("minimal_image: degree mismatch");

  MinResult result;
  result.stats.nodes = 1;
  auto finish = [&](MinResult& r) -> MinResult& {
    r.stats.elapsed = Clock::now() - start;
    return r;
  };

  std::vector<Candidate> cands{{set, Permutation::identity(n)}};
  if (set.empty()) {
    result.image = set;
    result.witness = cands.front().elt;
    return finish(result);
  }

  PermGroup current = group;
  auto ids = current.orbit_ids();
  for (Point beta : ord.sequence()) {
    if (current.is_trivial()) break;
    const auto orbit = ids[beta];
    bool meets = std::any_of(cands.begin(), cands.end(), [&](const Candidate& c) {
      return std::any_of(c.set.begin(), c.set.end(), [&](Point x) { return ids[x] == orbit; });
    });
    // Every image avoids this orbit, so none of its points can be placed.
    if (!meets) continue;

    PermGroup based = current.rebased(beta);
    const ChainLevel& level = based.chain().front();
    if (level.orbit.size() == 1) {
      std::erase_if(cands, [beta](const Candidate& c) { return !c.set.contains(beta); });
      continue;
    }

    std::vector<Candidate> next;
    for (const auto& c : cands) {
      for (Point x : c.set) {
        if (ids[x] != orbit) continue;
        if (options.node_budget != 0 && result.stats.nodes >= options.node_budget) {
          result.image = set;
          result.witness = Permutation::identity(n);
          result.stats.nodes = options.node_budget;
          result.outcome = SearchOutcome::timeout;
          return finish(result);
        }
        ++result.stats.nodes;
        const Permutation& g = level.from(x);
        next.push_back({act_set(g, c.set), compose(c.elt, g)});
      }
    }
    if (options.deduplicate) merge_duplicates(next);
    cands = std::move(next);
    current = based.first_level_stabilizer();
    ids = current.orbit_ids();
    ++result.stats.depth;
  }

  const Candidate* best = &cands.front();
  for (const auto& c : cands)
    if (set_less(c.set, best->set, ord) || (c.set == best->set && c.elt < best->elt)) best = &c;
  result.image = best->set;
  result.witness = best->elt;
  return finish(result);
}

Comparison cheap_compare(const PermGroup& group, const PointSet& s, const PointSet& t,
                         const BaseOrdering& ord) {
  if (s.size() != t.size()) return Comparison::undecided;
  const OrbitList list = orbits(group, ord);
  std::vector<std::size_t> in_s(list.orbits.size(), 0), in_t(list.orbits.size(), 0);
  for (Point x : s) ++in_s[list.orbit_of[x]];
  for (Point x : t) ++in_t[list.orbit_of[x]];
  for (std::size_t i = 0; i < list.orbits.size(); ++i) {
    const std::size_t size = list.orbits[i].size();
    bool full_both = in_s[i] == size && in_t[i] == size;
    bool empty_both = in_s[i] == 0 && in_t[i] == 0;
    if (full_both || empty_both) continue;
    if (in_t[i] == 0) return Comparison::strictly_less;
    if (in_s[i] == 0) return Comparison::strictly_greater;
    return Comparison::undecided;
  }
  return Comparison::undecided;
}

}  // namespace mincan
