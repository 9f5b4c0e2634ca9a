#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mincan/canimage.hpp"
#include "mincan/group.hpp"
#include "mincan/minimage.hpp"

namespace mincan {

// Group families used in the experiments, the extension construction, and the
// experiment runner.

/// S_n x S_n acting on an n x n grid; 1-based cell (i,j) is point (i-1)*n + j.
/// Requires 2 <= n <= 40.
PermGroup grid_group(std::size_t n);

/// Rank of a sorted m-subset of {0..n-1} among all m-subsets in lex order.
std::size_t rank_subset(std::span<const Point> subset, std::size_t n);
std::vector<Point> unrank_subset(std::size_t rank, std::size_t n, std::size_t m);
std::size_t binomial(std::size_t n, std::size_t k);

/// S_n acting on the m-subsets of {1..n}, points being lex ranks.
/// Requires 2 <= m < n and C(n,m) <= 10^4.
PermGroup mset_group(std::size_t n, std::size_t m);

/// The permutation of {0..k*n-1} sending q*n + r to q*n + r^g.
Permutation ext_elt(const Permutation& g, std::size_t k);
PermGroup ext_group(const PermGroup& group, std::size_t k);

/// H = ext_group(G, n+1) and T = S plus the diagonal markers l*n + l (1-based,
/// l = 1..n). T is the least element of its orbit under the reverse order.
std::pair<PermGroup, PointSet> adversarial_instance(const PermGroup& group, const PointSet& set);

std::pair<PermGroup, Permutation> random_conjugate(const PermGroup& group, std::uint64_t seed);
PointSet random_subset(std::size_t degree, std::size_t size, std::uint64_t seed);

/// A search method as named on the command line: minimage (alias
/// minimage-natural), fixedminorbit, fixedmaxorbit, or a canonical strategy.
struct BenchStrategy {
  enum class Kind { minimage, fixed_min_orbit, fixed_max_orbit, canonical };
  Kind kind = Kind::minimage;
  Strategy canonical{};

  std::string name() const;
  friend bool operator==(const BenchStrategy&, const BenchStrategy&) = default;
};

BenchStrategy parse_bench_strategy(std::string_view name);
MinResult run_strategy(const BenchStrategy& strategy, const PermGroup& group, const PointSet& set,
                       const SearchOptions& options);

struct ExperimentConfig {
  enum class Family { grid, mset, file };
  Family family = Family::grid;
  std::vector<std::size_t> sizes;              // grid side n, or mset n
  std::size_t m = 2;                           // mset only
  std::vector<std::filesystem::path> files;    // file only
  std::vector<std::size_t> fractions{2, 4, 8};  // set size is degree / fraction
  std::vector<BenchStrategy> strategies;
  std::uint64_t seed = 1;
  std::uint64_t node_budget = 1'000'000;
  std::size_t repeats = 1;
  std::size_t jobs = 1;
  bool conjugate = true;  // search a random conjugate of each group
};

struct ResultRow {
  std::string family;
  std::string instance;
  std::size_t degree = 0;
  std::string strategy;
  std::size_t fraction = 0;
  std::size_t repeat = 0;
  std::uint64_t seed = 0;  // seed of the subset
  bool solved = false;
  std::uint64_t nodes = 0;
  std::size_t depth = 0;
  double elapsed_ms = 0;
};

/// One row per (instance, fraction, repeat, strategy), in that sort order.
/// All strategies see the same conjugate and the same subset.
std::vector<ResultRow> run_suite(const ExperimentConfig& config);

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

struct StrategySummary {
  std::string strategy;
  std::size_t fraction = 0;
  std::size_t runs = 0;
  std::size_t solved = 0;
  double median_nodes = 0;   // unsolved rows count as the budget
  std::size_t largest = 0;   // degree of the largest solved instance
  double total_ms = 0;
};

std::vector<StrategySummary> summarize(const std::vector<ResultRow>& rows);
void write_summary(std::ostream& out, const std::vector<StrategySummary>& summary);

/// Median of the values; the mean of the middle pair for even counts.
double median(std::vector<double> values);

}  // namespace mincan
