#pragma once

#include <chrono>
#include <cstdint>

#include "mincan/base_ordering.hpp"
#include "mincan/group.hpp"
#include "mincan/perm.hpp"

namespace mincan {

/// A point set together with the group element that produced it from the
/// original input: act_set(elt, input) == set.
struct Candidate {
  PointSet set;
  Permutation elt;
};

enum class SearchOutcome { solved, timeout };

struct SearchStats {
  std::uint64_t nodes = 0;  // candidate sets materialized, counting the input
  std::size_t depth = 0;    // points stabilized
  std::chrono::nanoseconds elapsed{0};
};

struct MinResult {
  PointSet image;
  Permutation witness;
  SearchStats stats;
  SearchOutcome outcome = SearchOutcome::solved;

  bool solved() const { return outcome == SearchOutcome::solved; }
};

struct SearchOptions {
  /// Largest admissible node count; 0 means unlimited. On overrun the result
  /// carries SearchOutcome::timeout and nodes == node_budget.
  std::uint64_t node_budget = 0;
  bool deduplicate = true;
};

/// The least image of `set` under `group` in the set order induced by `ord`,
/// found by walking the points in order and splitting into cosets of point
/// stabilizers.
MinResult minimal_image(const PermGroup& group, const PointSet& set, const BaseOrdering& ord,
                        const SearchOptions& options = {});

enum class Comparison { strictly_less, strictly_greater, undecided };

/// Compares Min(G,S) with Min(G,T) from orbit structure alone. Requires
/// |S| == |T|, otherwise undecided.
Comparison cheap_compare(const PermGroup& group, const PointSet& s, const PointSet& t,
                         const BaseOrdering& ord);

}  // namespace mincan
