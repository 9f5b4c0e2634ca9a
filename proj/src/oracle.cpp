#include "mincan/oracle.hpp"

#include <unordered_set>

#include "mincan/ordering.hpp"
#include "mincan/random.hpp"

namespace mincan {

std::vector<Permutation> elements(const PermGroup& group, const ElementBudget& budget) {
  if (group.order() > budget.max_order)
    throw BudgetExceeded("group order exceeds the enumeration budget");
  std::vector<Permutation> out{Permutation::identity(group.degree())};
  auto levels = group.chain();
  // deepest level first, so each element is u_k * ... * u_1
  for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
    std::vector<Permutation> next;
    next.reserve(out.size() * level->orbit.size());
    for (const auto& g : out)
      for (const auto& t : level->transversal) next.push_back(compose(g, t));
    out = std::move(next);
  }
  return out;
}

MinResult brute_min(const PermGroup& group, const PointSet& set, const BaseOrdering& ord,
                    const ElementBudget& budget) {
  MinResult result;
  result.image = set;
  result.witness = Permutation::identity(group.degree());
  for (const auto& g : elements(group, budget)) {
    ++result.stats.nodes;
    PointSet image = act_set(g, set);
    if (set_less(image, result.image, ord)) {
      result.image = std::move(image);
      result.witness = g;
    }
  }
  return result;
}

std::vector<PointSet> set_orbit(const PermGroup& group, const PointSet& set,
                                const ElementBudget& budget) {
  std::vector<PointSet> orbit{set};
  std::unordered_set<PointSet, PointSetHash> seen{set};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (const auto& g : group.generators()) {
      PointSet image = act_set(g, orbit[k]);
      if (seen.insert(image).second) {
        if (orbit.size() >= budget.max_set_orbit)
          throw BudgetExceeded("set orbit exceeds the enumeration budget");
        orbit.push_back(std::move(image));
      }
    }
  }
  return orbit;
}

ContractReport check_canonical_contract(const PermGroup& group, const PointSet& set,
                                        const Labeller& labeller, std::size_t samples,
                                        const ElementBudget& budget, std::uint64_t seed) {
  ContractReport report;
  std::vector<PointSet> inputs;
  std::unordered_set<PointSet, PointSetHash> orbit_members;
  try {
    inputs = set_orbit(group, set, budget);
    report.orbit_size = inputs.size();
    orbit_members.insert(inputs.begin(), inputs.end());
  } catch (const BudgetExceeded&) {
    Xoshiro256 rng(seed);
    inputs.push_back(set);
    for (std::size_t i = 0; i < samples; ++i) inputs.push_back(act_set(random_element(group, rng), set));
  }

  auto record = [&](std::string kind, const PointSet& input, const PointSet& image, const PointSet& ref) {
    ++report.violation_count;
    if (report.violations.size() < 10) report.violations.push_back({std::move(kind), input, image, ref});
  };

  const MinResult reference = labeller(group, set);
  for (const auto& input : inputs) {
    ++report.checked;
    MinResult r = labeller(group, input);
    if (!r.solved()) {
      record("timeout", input, r.image, reference.image);
      continue;
    }
    if (act_set(r.witness, input) != r.image || !group.contains(r.witness))
      record("bad-witness", input, r.image, reference.image);
    else if (!orbit_members.empty() && !orbit_members.contains(r.image))
      record("not-in-orbit", input, r.image, reference.image);
    if (r.image != reference.image) record("not-invariant", input, r.image, reference.image);
  }
  return report;
}

ContractReport check_canonical_contract(const PermGroup& group, const PointSet& set,
                                        const Strategy& strategy, std::size_t samples,
                                        const ElementBudget& budget, std::uint64_t seed) {
  Labeller labeller = [strategy](const PermGroup& g, const PointSet& s) {
    return canonical_image(g, s, strategy);
  };
  return check_canonical_contract(group, set, labeller, samples, budget, seed);
}

}  // namespace mincan
