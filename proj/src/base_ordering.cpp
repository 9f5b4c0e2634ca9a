#include "mincan/base_ordering.hpp"

#include <numeric>

namespace mincan {

BaseOrdering::BaseOrdering(Permutation sigma) : sigma_(std::move(sigma)) {
  const Permutation inv = sigma_.inverse();
  sequence_.assign(inv.images().begin(), inv.images().end());
}

BaseOrdering BaseOrdering::natural(std::size_t degree) {
  return BaseOrdering(Permutation::identity(degree));
}

BaseOrdering BaseOrdering::reverse(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(degree - 1 - i);
  return BaseOrdering(Permutation(std::move(images)));
}

BaseOrdering BaseOrdering::from_sequence(std::span<const Point> sequence) {
  // sigma maps the k-th smallest point to k
  Permutation listed(std::vector<Point>(sequence.begin(), sequence.end()));
  return BaseOrdering(listed.inverse());
}

}  // namespace mincan
