#pragma once

#include <cstdint>
#include <limits>

#include "mincan/group.hpp"
#include "mincan/perm.hpp"

namespace mincan {

/// xoshiro256** seeded through splitmix64. Output depends only on the seed,
/// not on the standard library, so seeded experiments are reproducible.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_[4];
};

/// splitmix64 step, also used to derive per-cell seeds.
std::uint64_t mix_seed(std::uint64_t value);

Permutation random_permutation(std::size_t degree, Xoshiro256& rng);
PointSet random_subset(std::size_t degree, std::size_t size, Xoshiro256& rng);

/// Uniform element of the group: a product of random transversal elements.
Permutation random_element(const PermGroup& group, Xoshiro256& rng);

}  // namespace mincan
