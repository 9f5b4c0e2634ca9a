#include "mincan/group.hpp"

#include <algorithm>
#include <numeric>

namespace mincan {

namespace {

bool fixes_all(const Permutation& g, std::span<const Point> points) {
  return std::all_of(points.begin(), points.end(), [&](Point b) { return g[b] == b; });
}

ChainLevel make_level(std::size_t degree, Point base) {
  ChainLevel level;
  level.base = base;
  level.slot.assign(degree, -1);
  level.slot[base] = 0;
  level.orbit.push_back(base);
  level.transversal.push_back(Permutation::identity(degree));
  level.inverse_transversal.push_back(Permutation::identity(degree));
  return level;
}

// Closes the orbit of the level under all of its generators. Existing
// transversal entries are kept, so earlier sifts stay valid.
void close_orbit(ChainLevel& level) {
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const Permutation& s : level.generators) {
      Point image = s[level.orbit[k]];
      if (level.slot[image] >= 0) continue;
      level.slot[image] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(image);
      Permutation t = compose(level.transversal[k], s);
      level.inverse_transversal.push_back(t.inverse());
      level.transversal.push_back(std::move(t));
    }
  }
}

struct SiftResult {
  Permutation residue;
  std::size_t level;
};

SiftResult sift(const std::vector<ChainLevel>& levels, Permutation g, std::size_t start) {
  for (std::size_t l = start; l < levels.size(); ++l) {
    Point x = g[levels[l].base];
    if (!levels[l].in_orbit(x)) return {std::move(g), l};
    g = compose(g, levels[l].from(x));
  }
  return {std::move(g), levels.size()};
}

BigInt orbit_product(const std::vector<ChainLevel>& levels) {
  BigInt order = 1;
  for (const auto& level : levels) order *= level.orbit.size();
  return order;
}

}  // namespace

StabilizerChain StabilizerChain::build(std::size_t degree, std::span<const Permutation> generators,
                                       std::span<const Point> base_prefix,
                                       const BigInt* known_order) {
  StabilizerChain chain;
  chain.degree_ = degree;

  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }

  std::vector<Point> base;
  for (Point b : base_prefix)
    if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
  for (const auto& g : gens)
    if (fixes_all(g, base)) base.push_back(g.first_moved_point());

  auto& levels = chain.levels_;
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels.push_back(make_level(degree, base[i]));
    auto prefix = std::span<const Point>(base).first(i);
    for (const auto& g : gens)
      if (fixes_all(g, prefix)) levels.back().generators.push_back(g);
    close_orbit(levels.back());
  }

  // checked[l][k]: generators of level l already paired with orbit point k.
  std::vector<std::vector<std::size_t>> checked(levels.size());
  auto done = [&] { return known_order != nullptr && orbit_product(levels) == *known_order; };

  auto i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0 && !done()) {
    auto li = static_cast<std::size_t>(i);
    checked[li].resize(levels[li].orbit.size(), 0);
    bool restarted = false;
    for (std::size_t k = 0; k < levels[li].orbit.size() && !restarted; ++k) {
      while (checked[li][k] < levels[li].generators.size()) {
        const ChainLevel& level = levels[li];
        const Permutation& s = level.generators[checked[li][k]++];
        Permutation schreier = compose(compose(level.transversal[k], s), level.from(s[level.orbit[k]]));
        if (schreier.is_identity()) continue;
        auto [residue, j] = sift(levels, std::move(schreier), li + 1);
        if (residue.is_identity()) continue;
        if (j == levels.size()) {
          levels.push_back(make_level(degree, residue.first_moved_point()));
          checked.emplace_back();
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels[l].generators.push_back(residue);
          close_orbit(levels[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  return chain;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
}

PermGroup::PermGroup(std::size_t degree, std::shared_ptr<const StabilizerChain> chain,
                     std::size_t offset)
    : degree_(degree), chain_(std::move(chain)), offset_(offset) {
  auto levels = chain_->levels();
  if (offset_ < levels.size()) generators_ = levels[offset_].generators;
}

std::span<const ChainLevel> PermGroup::chain() const {
  if (!chain_) {
    chain_ = std::make_shared<const StabilizerChain>(StabilizerChain::build(degree_, generators_));
  }
  return chain_->levels().subspan(offset_);
}

BigInt PermGroup::order() const {
  BigInt order = 1;
  for (const auto& level : chain()) order *= level.orbit.size();
  return order;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Permutation g = p;
  for (const auto& level : chain()) {
    Point x = g[level.base];
    if (!level.in_orbit(x)) return false;
    g = compose(g, level.from(x));
  }
  return g.is_identity();
}

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<Point> orbit{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& g : generators_) {
      Point y = g[orbit[k]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  return orbit;
}

std::vector<std::uint32_t> PermGroup::orbit_ids() const {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> ids(degree_, unset);
  std::uint32_t next = 0;
  std::vector<Point> queue;
  for (Point start = 0; start < degree_; ++start) {
    if (ids[start] != unset) continue;
    ids[start] = next;
    queue.assign(1, start);
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& g : generators_) {
        Point y = g[queue[k]];
        if (ids[y] == unset) {
          ids[y] = next;
          queue.push_back(y);
        }
      }
    ++next;
  }
  return ids;
}

PointSet PermGroup::fixed_points() const {
  std::vector<Point> fixed;
  for (Point x = 0; x < degree_; ++x)
    if (std::all_of(generators_.begin(), generators_.end(), [x](const Permutation& g) { return g[x] == x; }))
      fixed.push_back(x);
  return PointSet::from_sorted(degree_, std::move(fixed));
}

PermGroup PermGroup::rebased(Point omega) const {
  if (omega >= degree_) throw std::out_of_range("rebased: point outside domain");
  auto levels = chain();
  if (!levels.empty() && levels.front().base == omega) return *this;
  BigInt known = order();
  Point prefix[] = {omega};
  PermGroup result(degree_, generators_);
  result.chain_ = std::make_shared<const StabilizerChain>(
      StabilizerChain::build(degree_, generators_, prefix, &known));
  return result;
}

PermGroup PermGroup::first_level_stabilizer() const {
  auto levels = chain();
  if (levels.empty()) return *this;
  return PermGroup(degree_, chain_, offset_ + 1);
}

PermGroup PermGroup::point_stabilizer(Point omega) const {
  if (omega >= degree_) throw std::out_of_range("point_stabilizer: point outside domain");
  bool fixed = std::all_of(generators_.begin(), generators_.end(),
                           [omega](const Permutation& g) { return g[omega] == omega; });
  if (fixed) return *this;
  return rebased(omega).first_level_stabilizer();
}

std::vector<Permutation> PermGroup::coset_representatives(Point omega, const BaseOrdering& ord) const {
  if (omega >= degree_) throw std::out_of_range("coset_representatives: point outside domain");
  PermGroup based = rebased(omega);
  const ChainLevel& level = based.chain().front();
  std::vector<Point> targets = level.orbit;
  std::sort(targets.begin(), targets.end(), [&](Point a, Point b) { return ord.less(a, b); });
  std::vector<Permutation> reps;
  reps.reserve(targets.size());
  for (Point x : targets) reps.push_back(level.to(x));
  return reps;
}

std::optional<Permutation> PermGroup::element_mapping(Point x, Point y) const {
  if (x >= degree_ || y >= degree_) throw std::out_of_range("element_mapping: point outside domain");
  if (x == y) return Permutation::identity(degree_);
  PermGroup based = rebased(x);
  const ChainLevel& level = based.chain().front();
  if (!level.in_orbit(y)) return std::nullopt;
  return level.to(y);
}

PermGroup PermGroup::conjugate(const Permutation& sigma) const {
  if (sigma.degree() != degree_) throw std::invalid_argument("conjugate: degree mismatch");
  Permutation inv = sigma.inverse();
  std::vector<Permutation> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(compose(compose(inv, g), sigma));
  return PermGroup(degree_, std::move(gens));
}

OrbitList orbits(const PermGroup& group, const BaseOrdering& ord) {
  auto ids = group.orbit_ids();
  std::uint32_t count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<std::vector<Point>> members(count);
  for (Point x = 0; x < ids.size(); ++x) members[ids[x]].push_back(x);

  auto min_rank = [&](const std::vector<Point>& orbit) {
    Point best = ord.rank(orbit.front());
    for (Point x : orbit) best = std::min(best, ord.rank(x));
    return best;
  };
  std::vector<std::uint32_t> perm(count);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<Point> keys(count);
  for (std::uint32_t i = 0; i < count; ++i) keys[i] = min_rank(members[i]);
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });

  OrbitList list;
  list.orbit_of.resize(ids.size());
  for (std::uint32_t pos = 0; pos < count; ++pos) {
    for (Point x : members[perm[pos]]) list.orbit_of[x] = pos;
    list.orbits.push_back(PointSet::from_sorted(group.degree(), std::move(members[perm[pos]])));
  }
  return list;
}

}  // namespace mincan
