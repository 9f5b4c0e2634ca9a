#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mincan/base_ordering.hpp"
#include "mincan/canimage.hpp"
#include "mincan/group.hpp"
#include "mincan/minimage.hpp"

namespace mincan {

// Brute-force ground truth for small instances.

struct ElementBudget {
  std::size_t max_order = 10'000;
  std::size_t max_set_orbit = 10'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every element exactly once, as products of transversal elements.
std::vector<Permutation> elements(const PermGroup& group, const ElementBudget& budget = {});

/// Exhaustive minimum of {S^g | g in G}.
MinResult brute_min(const PermGroup& group, const PointSet& set, const BaseOrdering& ord,
                    const ElementBudget& budget = {});

/// {S^g | g in G} by breadth-first closure under the generators, in discovery order.
std::vector<PointSet> set_orbit(const PermGroup& group, const PointSet& set,
                                const ElementBudget& budget = {});

using Labeller = std::function<MinResult(const PermGroup&, const PointSet&)>;

struct Violation {
  std::string kind;  // "not-in-orbit", "bad-witness", "not-invariant" or "timeout"
  PointSet input;
  PointSet image;
  PointSet reference;
};

struct ContractReport {
  std::size_t checked = 0;
  std::size_t orbit_size = 0;  // 0 when the orbit was sampled
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // the first ten

  bool passed() const { return violation_count == 0; }
};

/// Checks both canonical-labelling requirements: the image lies in the input's
/// orbit, and every member of the orbit gets the same image. The whole orbit is
/// used when it fits the budget, otherwise `samples` random images.
ContractReport check_canonical_contract(const PermGroup& group, const PointSet& set,
                                        const Labeller& labeller, std::size_t samples = 100,
                                        const ElementBudget& budget = {}, std::uint64_t seed = 1);

ContractReport check_canonical_contract(const PermGroup& group, const PointSet& set,
                                        const Strategy& strategy, std::size_t samples = 100,
                                        const ElementBudget& budget = {}, std::uint64_t seed = 1);

}  // namespace mincan
