#include "mincan/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include <boost/functional/hash.hpp>

namespace mincan {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw DomainError("image table is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

Point Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q[p[static_cast<Point>(i)]];
  return Permutation::from_trusted(std::move(images));
}

Point act_point(const Permutation& p, Point x) {
  if (x >= p.degree()) throw std::out_of_range("act_point: point outside domain");
  return p[x];
}

PointSet::PointSet(std::size_t degree, std::vector<Point> members)
    : degree_(degree), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw DomainError("point set contains a repeated point");
  if (!members_.empty() && members_.back() >= degree_)
    throw DomainError("point " + std::to_string(members_.back() + 1) + " exceeds degree " +
                      std::to_string(degree_));
}

PointSet PointSet::from_one_based(std::size_t degree, std::span<const int> points) {
  std::vector<Point> members;
  members.reserve(points.size());
  for (int x : points) {
    if (x < 1 || static_cast<std::size_t>(x) > degree)
      throw DomainError("point " + std::to_string(x) + " outside 1.." + std::to_string(degree));
    members.push_back(static_cast<Point>(x - 1));
  }
  return PointSet(degree, std::move(members));
}

PointSet PointSet::from_sorted(std::size_t degree, std::vector<Point> members) {
  PointSet s(degree);
  s.members_ = std::move(members);
  return s;
}

bool PointSet::contains(Point x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::vector<int> PointSet::one_based() const {
  std::vector<int> out;
  out.reserve(members_.size());
  for (Point x : members_) out.push_back(static_cast<int>(x) + 1);
  return out;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  std::vector<Point> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet::from_sorted(a.degree(), std::move(out));
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  std::vector<Point> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet::from_sorted(a.degree(), std::move(out));
}

PointSet act_set(const Permutation& p, const PointSet& s) {
  if (p.degree() != s.degree()) throw std::invalid_argument("act_set: degree mismatch");
  std::vector<Point> out;
  out.reserve(s.size());
  for (Point x : s) out.push_back(p[x]);
  std::sort(out.begin(), out.end());
  return PointSet::from_sorted(s.degree(), std::move(out));
}

std::size_t PointSetHash::operator()(const PointSet& s) const noexcept {
  return boost::hash_range(s.begin(), s.end());
}

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

int read_int(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  int value = 0;
  auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc())
    throw DomainError("expected an integer at offset " + std::to_string(pos) + " in '" +
                      std::string(text) + "'");
  pos = static_cast<std::size_t>(end - text.data());
  skip_space(text, pos);
  return value;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) throw DomainError("empty cycle text");
  while (pos < text.size()) {
    if (text[pos] != '(') throw DomainError("expected '(' in '" + std::string(text) + "'");
    ++pos;
    skip_space(text, pos);
    std::vector<Point> cycle;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
    } else {
      for (;;) {
        int x = read_int(text, pos);
        if (x < 1 || static_cast<std::size_t>(x) > degree)
          throw DomainError("point " + std::to_string(x) + " outside 1.." +
                            std::to_string(degree));
        auto p = static_cast<Point>(x - 1);
        if (used[p]) throw DomainError("point " + std::to_string(x) + " repeated in cycles");
        used[p] = true;
        cycle.push_back(p);
        if (pos >= text.size()) throw DomainError("unterminated cycle in '" + std::string(text) + "'");
        if (text[pos] == ',') {
          ++pos;
          continue;
        }
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        throw DomainError("unexpected character in '" + std::string(text) + "'");
      }
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space(text, pos);
  }
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) continue;
    any = true;
    out << '(';
    Point x = start;
    bool first = true;
    do {
      seen[x] = true;
      if (!first) out << ',';
      out << x + 1;
      first = false;
      x = p[x];
    } while (x != start);
    out << ')';
  }
  return any ? out.str() : "()";
}

PointSet parse_set(std::string_view text, std::size_t degree) {
  std::size_t pos = 0;
  skip_space(text, pos);
  bool braced = pos < text.size() && text[pos] == '{';
  if (braced) ++pos;
  std::vector<int> points;
  skip_space(text, pos);
  while (pos < text.size() && text[pos] != '}') {
    points.push_back(read_int(text, pos));
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_space(text, pos);
    } else if (pos < text.size() && text[pos] != '}') {
      throw DomainError("malformed set literal '" + std::string(text) + "'");
    }
  }
  if (braced) {
    if (pos >= text.size()) throw DomainError("unterminated set literal '" + std::string(text) + "'");
    ++pos;
    skip_space(text, pos);
  }
  if (pos != text.size()) throw DomainError("trailing characters in set literal '" + std::string(text) + "'");
  return PointSet::from_one_based(degree, points);
}

std::string format_set(const PointSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Point x : s) {
    if (!first) out << ',';
    out << x + 1;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace mincan
