#include "mincan/ordering.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mincan {

bool set_less(const PointSet& a, const PointSet& b, const BaseOrdering& ord) {
  auto ia = a.begin();
  auto ib = b.begin();
  Point best = std::numeric_limits<Point>::max();
  bool best_in_a = false;
  auto consider = [&](Point x, bool in_a) {
    if (ord.rank(x) < best) {
      best = ord.rank(x);
      best_in_a = in_a;
    }
  };
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && *ia < *ib)) {
      consider(*ia++, true);
    } else if (ia == a.end() || *ib < *ia) {
      consider(*ib++, false);
    } else {
      ++ia;
      ++ib;
    }
  }
  return best != std::numeric_limits<Point>::max() && best_in_a;
}

const PointSet& min_of_list(std::span<const PointSet> sets, const BaseOrdering& ord) {
  if (sets.empty()) throw std::invalid_argument("min_of_list: empty list");
  const PointSet* best = &sets.front();
  for (const auto& s : sets)
    if (set_less(s, *best, ord)) best = &s;
  return *best;
}

namespace {

BaseOrdering fixed_orbit_order(const PermGroup& group, bool prefer_small, StabilizerReading reading) {
  const std::size_t n = group.degree();
  std::vector<bool> remain(n, true);
  std::vector<Point> order;
  order.reserve(n);
  PermGroup current = group;
  while (order.size() < n) {
    auto ids = current.orbit_ids();
    std::vector<std::size_t> size(n, 0);
    std::vector<bool> meets(n, false);
    for (Point x = 0; x < n; ++x) {
      ++size[ids[x]];
      if (remain[x]) meets[ids[x]] = true;
    }
    std::size_t target = prefer_small ? std::numeric_limits<std::size_t>::max() : 0;
    for (Point x = 0; x < n; ++x) {
      if (!remain[x]) continue;
      target = prefer_small ? std::min(target, size[ids[x]]) : std::max(target, size[ids[x]]);
    }
    Point chosen = 0;
    for (Point x = 0; x < n; ++x)
      if (remain[x] && size[ids[x]] == target) {
        chosen = x;
        break;
      }
    remain[chosen] = false;
    order.push_back(chosen);
    if (reading == StabilizerReading::cumulative) {
      if (!current.is_trivial()) current = current.point_stabilizer(chosen);
    } else {
      current = group.point_stabilizer(chosen);
    }
  }
  return BaseOrdering::from_sequence(order);
}

}  // namespace

BaseOrdering fixed_min_orbit(const PermGroup& group, StabilizerReading reading) {
  return fixed_orbit_order(group, true, reading);
}

BaseOrdering fixed_max_orbit(const PermGroup& group, StabilizerReading reading) {
  return fixed_orbit_order(group, false, reading);
}

Transported transport(const PermGroup& group, const PointSet& set, const BaseOrdering& ord) {
  const Permutation& sigma = ord.sigma();
  return {group.conjugate(sigma), act_set(sigma, set), sigma};
}

BaseOrdering parse_ordering(std::string_view text, const PermGroup& group) {
  const std::size_t n = group.degree();
  if (text == "natural") return BaseOrdering::natural(n);
  if (text == "reverse") return BaseOrdering::reverse(n);
  if (text == "fixedminorbit") return fixed_min_orbit(group);
  if (text == "fixedmaxorbit") return fixed_max_orbit(group);
  if (text.starts_with("perm:")) return BaseOrdering(parse_cycles(text.substr(5), n));
  throw DomainError("unknown order '" + std::string(text) +
                    "' (expected natural, reverse, fixedminorbit, fixedmaxorbit or perm:<cycles>)");
}

}  // namespace mincan
