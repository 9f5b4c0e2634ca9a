#pragma once

#include <span>
#include <vector>

#include "mincan/perm.hpp"

namespace mincan {

/// A total order on the domain given by a permutation sigma:
/// x <=_sigma y  iff  x^sigma <= y^sigma.
class BaseOrdering {
 public:
  BaseOrdering() = default;
  explicit BaseOrdering(Permutation sigma);

  static BaseOrdering natural(std::size_t degree);
  /// i -> n+1-i, so that the largest point comes first.
  static BaseOrdering reverse(std::size_t degree);
  /// `sequence` lists every point once, smallest first.
  static BaseOrdering from_sequence(std::span<const Point> sequence);

  std::size_t degree() const { return sigma_.degree(); }
  const Permutation& sigma() const { return sigma_; }

  /// Position of x in the order, 0 for the smallest point.
  Point rank(Point x) const { return sigma_[x]; }
  bool less(Point x, Point y) const { return sigma_[x] < sigma_[y]; }

  /// All points, smallest first.
  std::span<const Point> sequence() const { return sequence_; }

  bool is_natural() const { return sigma_.is_identity(); }

  friend bool operator==(const BaseOrdering& a, const BaseOrdering& b) { return a.sigma_ == b.sigma_; }

 private:
  Permutation sigma_;
  std::vector<Point> sequence_;
};

}  // namespace mincan
