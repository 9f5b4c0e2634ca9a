#include "mincan/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mincan {

namespace {

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t mix_seed(std::uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (auto& word : state_) {
    seed += 0x9e3779b97f4a7c15ULL;
    word = mix_seed(seed - 0x9e3779b97f4a7c15ULL);
  }
}

Xoshiro256::result_type Xoshiro256::operator()() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below: zero bound");
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t draw;
  do {
    draw = (*this)();
  } while (draw >= limit);
  return draw % bound;
}

Permutation random_permutation(std::size_t degree, Xoshiro256& rng) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = degree; i > 1; --i) std::swap(images[i - 1], images[rng.below(i)]);
  return Permutation::from_trusted(std::move(images));
}

PointSet random_subset(std::size_t degree, std::size_t size, Xoshiro256& rng) {
  if (size > degree) throw std::invalid_argument("random_subset: size exceeds degree");
  auto shuffled = random_permutation(degree, rng);
  std::vector<Point> members(shuffled.images().begin(), shuffled.images().begin() + static_cast<std::ptrdiff_t>(size));
  return PointSet(degree, std::move(members));
}

Permutation random_element(const PermGroup& group, Xoshiro256& rng) {
  Permutation g = Permutation::identity(group.degree());
  for (const auto& level : group.chain()) g = compose(level.transversal[rng.below(level.orbit.size())], g);
  return g;
}

}  // namespace mincan
