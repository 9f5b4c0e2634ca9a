#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mincan/base_ordering.hpp"
#include "mincan/group.hpp"
#include "mincan/minimage.hpp"
#include "mincan/perm.hpp"

namespace mincan {

/// Which orbit to branch on. Orbits are scored over the current candidate
/// list; only non-singleton orbits meeting at least one candidate qualify.
enum class Selector {
  min_orbit,           // smallest orbit
  max_orbit,           // largest orbit
  rare_orbit,          // least total intersection with the candidates
  common_orbit,        // greatest total intersection
  rare_ratio_orbit,    // least log(intersection) / |orbit|
  common_ratio_orbit,  // greatest log(intersection) / |orbit|
  single_max_orbit,    // largest non-singleton orbit, candidates ignored
};

/// How candidates are split after branching. Every refiner first splits by
/// membership of the fixed points of the stabilizer; the `plus_*` refiners
/// then split by orbit-count vector.
enum class Refiner { fixed_points_only, plus_min, plus_rare, plus_common };

struct Strategy {
  Selector selector = Selector::rare_orbit;
  Refiner refiner = Refiner::plus_min;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// Parses the CLI names: minorbit, maxorbit, rareorbit, commonorbit,
/// rareratioorbit, commonratioorbit, rareorbitplusmin, rareorbitplusrare,
/// rareorbitpluscommon, and singlemaxorbit.
Strategy parse_strategy(std::string_view name);
std::string strategy_name(const Strategy& strategy);

/// The nine strategies with documented behaviour (singlemaxorbit excluded).
std::span<const Strategy> named_strategies();

/// |o ∩ S| for each orbit o, in orbit-list order.
struct OrbCountVector {
  std::vector<std::uint32_t> counts;

  friend bool operator==(const OrbCountVector&, const OrbCountVector&) = default;
  friend auto operator<=>(const OrbCountVector&, const OrbCountVector&) = default;
};

OrbCountVector orbcount(const OrbitList& orbits, const PointSet& set);
OrbCountVector orbcount(const PermGroup& group, const PointSet& set, const BaseOrdering& ord);

/// A candidate standing for `multiplicity` equal entries of the search list.
/// Selectors and refiners weigh candidates by multiplicity, so merging equal
/// sets does not change their decisions.
struct WeightedCandidate {
  PointSet set;
  Permutation elt;
  BigInt multiplicity = 1;
};

using CandidateList = std::vector<WeightedCandidate>;

/// Sums the multiplicities of equal sets, keeping the least witness.
void merge_duplicates(CandidateList& list);

/// Branch point for the current group, or nullopt when no non-singleton orbit
/// meets any candidate. Throws std::invalid_argument for the trivial group.
std::optional<Point> select_point(Selector selector, const PermGroup& group,
                                  const CandidateList& list, const BaseOrdering& ord);

/// Every candidate mapped by one coset representative per point of the first
/// base orbit: the representative for y maps y to the base point.
CandidateList expand(const CandidateList& list, const ChainLevel& level);

/// Keeps the candidates in the first cell of the ordered partition produced
/// by `refiner` for `group`, merged by set.
CandidateList refine(Refiner refiner, const PermGroup& group, const CandidateList& expanded,
                     const BaseOrdering& ord);

/// Canonical image of `set` under `group`: the result lies in the orbit of
/// `set` and is the same for every member of that orbit.
MinResult canonical_image(const PermGroup& group, const PointSet& set, const Strategy& strategy,
                          const BaseOrdering& ord, const SearchOptions& options = {});

inline MinResult canonical_image(const PermGroup& group, const PointSet& set,
                                 const Strategy& strategy, const SearchOptions& options = {}) {
  return canonical_image(group, set, strategy, BaseOrdering::natural(group.degree()), options);
}

}  // namespace mincan
