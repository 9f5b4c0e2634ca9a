#pragma once

// Permutations of a finite domain and their action on points and point sets.
//
// Points are 0-based internally. Every textual interface (cycle notation, set
// literals, JSON) is 1-based. Composition reads left to right:
// x^(p*q) = (x^p)^q.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mincan {

using Point = std::uint32_t;

/// Raised for malformed user input (cycle text, set literals, group files).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Permutation {
 public:
  Permutation() = default;

  /// Takes 0-based images; throws DomainError unless they form a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Skips the bijection check; for tables built from other permutations.
  static Permutation from_trusted(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  std::span<const Point> images() const { return images_; }

  /// Unchecked image of a 0-based point.
  Point operator[](Point x) const { return images_[x]; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Smallest moved point, or degree() for the identity.
  Point first_moved_point() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// x^(compose(p, q)) = (x^p)^q. Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// Checked point action; throws std::out_of_range.
Point act_point(const Permutation& p, Point x);

/// Sorted set of distinct 0-based points of a fixed-degree domain.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t degree) : degree_(degree) {}

  /// Sorts and validates; throws DomainError on duplicates or out-of-range points.
  PointSet(std::size_t degree, std::vector<Point> members);
  PointSet(std::size_t degree, std::initializer_list<Point> members)
      : PointSet(degree, std::vector<Point>(members)) {}

  /// Builds from 1-based points, as written in the examples and on the CLI.
  static PointSet from_one_based(std::size_t degree, std::span<const int> points);
  static PointSet from_one_based(std::size_t degree, std::initializer_list<int> points) {
    return from_one_based(degree, std::span<const int>(points.begin(), points.size()));
  }

  /// Trusted constructor: members must already be sorted and distinct.
  static PointSet from_sorted(std::size_t degree, std::vector<Point> members);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Point> members() const { return members_; }
  bool contains(Point x) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::vector<int> one_based() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t degree_ = 0;
  std::vector<Point> members_;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);

/// The image {a^p | a in S}, sorted.
PointSet act_set(const Permutation& p, const PointSet& s);

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept;
};

/// Disjoint-cycle notation, 1-based: "(1,4)(2,3)(5,6)"; "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(const Permutation& p);

/// Comma-separated 1-based integers, optionally braced: "2,3,5" or "{2,3,5}".
PointSet parse_set(std::string_view text, std::size_t degree);
std::string format_set(const PointSet& s);

}  // namespace mincan
