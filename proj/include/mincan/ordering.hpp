#pragma once

#include <span>
#include <string_view>

#include "mincan/base_ordering.hpp"
#include "mincan/group.hpp"
#include "mincan/perm.hpp"

namespace mincan {

/// Strict set order: A < B iff the smallest point (under `ord`) of the
/// symmetric difference lies in A. Equal sets are not less.
bool set_less(const PointSet& a, const PointSet& b, const BaseOrdering& ord);

/// The least set of a nonempty list; throws std::invalid_argument when empty.
const PointSet& min_of_list(std::span<const PointSet> sets, const BaseOrdering& ord);

/// How the stabilizer is updated after a point is placed in the static
/// orderings: `cumulative` stabilizes the running group, `literal` restarts
/// from the input group each time.
enum class StabilizerReading { cumulative, literal };

/// Points are placed by repeatedly taking the smallest point of a smallest
/// orbit that still has unplaced points, then stabilizing it.
BaseOrdering fixed_min_orbit(const PermGroup& group,
                             StabilizerReading reading = StabilizerReading::cumulative);
/// As fixed_min_orbit, preferring the largest orbits.
BaseOrdering fixed_max_orbit(const PermGroup& group,
                             StabilizerReading reading = StabilizerReading::cumulative);

struct Transported {
  PermGroup group;  // G^sigma
  PointSet set;     // S^sigma
  Permutation sigma;
};

/// Rewrites a problem under `ord` as one under the natural order:
/// Min(G, S, <=_sigma) = Min(G^sigma, S^sigma, <=)^(sigma^-1).
Transported transport(const PermGroup& group, const PointSet& set, const BaseOrdering& ord);

/// natural | reverse | fixedminorbit | fixedmaxorbit | perm:<cycles>
BaseOrdering parse_ordering(std::string_view text, const PermGroup& group);

}  // namespace mincan
