#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mincan/base_ordering.hpp"
#include "mincan/perm.hpp"

namespace mincan {

using BigInt = boost::multiprecision::cpp_int;

/// One level of a stabilizer chain: the orbit of `base` under the stabilizer
/// of all earlier base points, with explicit transversal elements.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> slot;  // point -> index into orbit, -1 if absent
  std::vector<Permutation> transversal;          // maps base to orbit[k]
  std::vector<Permutation> inverse_transversal;  // maps orbit[k] to base

  bool in_orbit(Point x) const { return slot[x] >= 0; }
  const Permutation& to(Point x) const { return transversal[static_cast<std::size_t>(slot[x])]; }
  const Permutation& from(Point x) const {
    return inverse_transversal[static_cast<std::size_t>(slot[x])];
  }
};

class StabilizerChain {
 public:
  /// Deterministic Schreier-Sims. The base starts with `base_prefix` and is
  /// extended by the smallest point moved by each new strong generator. When
  /// `known_order` is given the construction stops as soon as the transversal
  /// sizes multiply to it.
  static StabilizerChain build(std::size_t degree, std::span<const Permutation> generators,
                               std::span<const Point> base_prefix = {},
                               const BigInt* known_order = nullptr);

  std::size_t degree() const { return degree_; }
  std::span<const ChainLevel> levels() const { return levels_; }

 private:
  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
};

/// Orbits of a group, sorted by their smallest member under a base ordering.
struct OrbitList {
  std::vector<PointSet> orbits;
  std::vector<std::uint32_t> orbit_of;  // point -> index into orbits
};

/// A permutation group given by generators, with a lazily built stabilizer
/// chain. Not safe to share across threads until `chain()` has been called.
class PermGroup {
 public:
  PermGroup() = default;
  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {});

  std::size_t degree() const { return degree_; }
  std::span<const Permutation> generators() const { return generators_; }
  bool is_trivial() const { return generators_.empty(); }

  /// Chain levels for this group (builds the chain on first use).
  std::span<const ChainLevel> chain() const;

  BigInt order() const;
  bool contains(const Permutation& p) const;

  std::vector<Point> orbit(Point x) const;
  /// Point -> orbit index, numbered in order of smallest member.
  std::vector<std::uint32_t> orbit_ids() const;
  PointSet fixed_points() const;

  /// The same group with a chain whose first base point is `omega`.
  PermGroup rebased(Point omega) const;
  PermGroup point_stabilizer(Point omega) const;

  /// Stabilizer of the first base point; the chain is shared, not rebuilt.
  PermGroup first_level_stabilizer() const;

  /// One element per point x of omega's orbit, mapping omega to x; sorted by
  /// the rank of x under `ord`.
  std::vector<Permutation> coset_representatives(Point omega, const BaseOrdering& ord) const;
  std::vector<Permutation> coset_representatives(Point omega) const {
    return coset_representatives(omega, BaseOrdering::natural(degree_));
  }

  std::optional<Permutation> element_mapping(Point x, Point y) const;

  /// Generated by sigma^-1 g sigma for each generator g.
  PermGroup conjugate(const Permutation& sigma) const;

 private:
  PermGroup(std::size_t degree, std::shared_ptr<const StabilizerChain> chain, std::size_t offset);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  mutable std::shared_ptr<const StabilizerChain> chain_;
  std::size_t offset_ = 0;
};

OrbitList orbits(const PermGroup& group, const BaseOrdering& ord);

}  // namespace mincan
