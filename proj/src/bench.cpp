#include "mincan/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "mincan/io.hpp"
#include "mincan/ordering.hpp"
#include "mincan/random.hpp"

namespace mincan {

namespace {

// (1,2) and (1,2,...,n) on {0..n-1}.
std::pair<Permutation, Permutation> symmetric_generators(std::size_t n) {
  std::vector<Point> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0u);
  std::swap(swap[0], swap[1]);
  for (Point i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n);
  return {Permutation(std::move(swap)), Permutation(std::move(cycle))};
}

std::uint64_t hash_name(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t s = mix_seed(seed);
  for (auto p : parts) s = mix_seed(s ^ p);
  return s;
}

struct Instance {
  std::string family;
  std::string name;
  PermGroup group;
};

std::vector<Instance> make_instances(const ExperimentConfig& config) {
  std::vector<Instance> out;
  switch (config.family) {
    case ExperimentConfig::Family::grid:
      for (auto n : config.sizes) out.push_back({"grid", "grid-" + std::to_string(n), grid_group(n)});
      break;
    case ExperimentConfig::Family::mset:
      for (auto n : config.sizes)
        out.push_back({"mset", "mset-" + std::to_string(n) + "-" + std::to_string(config.m),
                       mset_group(n, config.m)});
      break;
    case ExperimentConfig::Family::file:
      for (const auto& path : config.files)
        out.push_back({"file", path.stem().string(), read_group_file(path)});
      break;
  }
  return out;
}

}  // namespace

PermGroup grid_group(std::size_t n) {
  if (n < 2 || n > 40) throw std::invalid_argument("grid_group: n must be in 2..40");
  auto [swap, cycle] = symmetric_generators(n);
  auto rows = [n](const Permutation& s) {
    std::vector<Point> img(n * n);
    for (Point i = 0; i < n; ++i)
      for (Point j = 0; j < n; ++j) img[i * n + j] = static_cast<Point>(s[i] * n + j);
    return Permutation::from_trusted(std::move(img));
  };
  auto cols = [n](const Permutation& s) {
    std::vector<Point> img(n * n);
    for (Point i = 0; i < n; ++i)
      for (Point j = 0; j < n; ++j) img[i * n + j] = static_cast<Point>(i * n + s[j]);
    return Permutation::from_trusted(std::move(img));
  };
  return PermGroup(n * n, {rows(swap), rows(cycle), cols(swap), cols(cycle)});
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t rank_subset(std::span<const Point> subset, std::size_t n) {
  // subsets before this one: those whose first differing element is smaller
  std::size_t rank = 0;
  const std::size_t m = subset.size();
  Point prev = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (Point v = (i == 0 ? 0 : prev + 1); v < subset[i]; ++v) rank += binomial(n - 1 - v, m - 1 - i);
    prev = subset[i];
  }
  return rank;
}

std::vector<Point> unrank_subset(std::size_t rank, std::size_t n, std::size_t m) {
  std::vector<Point> out;
  Point v = 0;
  for (std::size_t i = 0; i < m; ++i) {
    while (true) {
      std::size_t block = binomial(n - 1 - v, m - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    out.push_back(v++);
  }
  return out;
}

PermGroup mset_group(std::size_t n, std::size_t m) {
  if (m < 2 || m >= n) throw std::invalid_argument("mset_group: need 2 <= m < n");
  const std::size_t degree = binomial(n, m);
  if (degree > 10'000) throw std::invalid_argument("mset_group: C(n,m) exceeds 10^4");
  auto [swap, cycle] = symmetric_generators(n);
  auto induced = [&](const Permutation& s) {
    std::vector<Point> img(degree);
    for (std::size_t r = 0; r < degree; ++r) {
      auto subset = unrank_subset(r, n, m);
      for (auto& x : subset) x = s[x];
      std::sort(subset.begin(), subset.end());
      img[r] = static_cast<Point>(rank_subset(subset, n));
    }
    return Permutation(std::move(img));
  };
  return PermGroup(degree, {induced(swap), induced(cycle)});
}

Permutation ext_elt(const Permutation& g, std::size_t k) {
  const std::size_t n = g.degree();
  std::vector<Point> img(k * n);
  for (std::size_t j = 0; j < k * n; ++j) img[j] = static_cast<Point>(j / n * n + g[j % n]);
  return Permutation::from_trusted(std::move(img));
}

PermGroup ext_group(const PermGroup& group, std::size_t k) {
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) gens.push_back(ext_elt(g, k));
  return PermGroup(group.degree() * k, std::move(gens));
}

std::pair<PermGroup, PointSet> adversarial_instance(const PermGroup& group, const PointSet& set) {
  const std::size_t n = group.degree();
  PermGroup h = ext_group(group, n + 1);
  std::vector<Point> members(set.begin(), set.end());
  for (std::size_t l = 1; l <= n; ++l) members.push_back(static_cast<Point>(l * n + l - 1));
  return {std::move(h), PointSet(n * (n + 1), std::move(members))};
}

std::pair<PermGroup, Permutation> random_conjugate(const PermGroup& group, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  Permutation sigma = random_permutation(group.degree(), rng);
  return {group.conjugate(sigma), std::move(sigma)};
}

PointSet random_subset(std::size_t degree, std::size_t size, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  return random_subset(degree, size, rng);
}

std::string BenchStrategy::name() const {
  switch (kind) {
    case Kind::minimage: return "minimage-natural";
    case Kind::fixed_min_orbit: return "fixedminorbit";
    case Kind::fixed_max_orbit: return "fixedmaxorbit";
    case Kind::canonical: return strategy_name(canonical);
  }
  return {};
}

BenchStrategy parse_bench_strategy(std::string_view name) {
  if (name == "minimage" || name == "minimage-natural") return {BenchStrategy::Kind::minimage, {}};
  if (name == "fixedminorbit") return {BenchStrategy::Kind::fixed_min_orbit, {}};
  if (name == "fixedmaxorbit") return {BenchStrategy::Kind::fixed_max_orbit, {}};
  return {BenchStrategy::Kind::canonical, parse_strategy(name)};
}

MinResult run_strategy(const BenchStrategy& strategy, const PermGroup& group, const PointSet& set,
                       const SearchOptions& options) {
  switch (strategy.kind) {
    case BenchStrategy::Kind::minimage:
      return minimal_image(group, set, BaseOrdering::natural(group.degree()), options);
    case BenchStrategy::Kind::fixed_min_orbit:
      return minimal_image(group, set, fixed_min_orbit(group), options);
    case BenchStrategy::Kind::fixed_max_orbit:
      return minimal_image(group, set, fixed_max_orbit(group), options);
    case BenchStrategy::Kind::canonical:
      return canonical_image(group, set, strategy.canonical, options);
  }
  throw std::logic_error("unknown strategy kind");
}

std::vector<ResultRow> run_suite(const ExperimentConfig& config) {
  struct Cell {
    const Instance* instance;
    PointSet set;
    ResultRow row;
    const BenchStrategy* strategy;
  };

  std::vector<Instance> instances = make_instances(config);
  std::vector<Cell> cells;
  for (auto& inst : instances) {
    if (config.conjugate)
      inst.group = random_conjugate(inst.group, derive(config.seed, {hash_name(inst.name)})).first;
    inst.group.chain();  // built before any timed section
    for (auto fraction : config.fractions) {
      if (fraction == 0) throw std::invalid_argument("run_suite: fraction must be positive");
      for (std::size_t rep = 0; rep < config.repeats; ++rep) {
        const std::uint64_t seed = derive(config.seed, {hash_name(inst.name), fraction, rep});
        const std::size_t degree = inst.group.degree();
        PointSet set = random_subset(degree, degree / fraction, seed);
        for (const auto& strategy : config.strategies) {
          ResultRow row;
          row.family = inst.family;
          row.instance = inst.name;
          row.degree = degree;
          row.strategy = strategy.name();
          row.fraction = fraction;
          row.repeat = rep;
          row.seed = seed;
          cells.push_back({&inst, set, std::move(row), &strategy});
        }
      }
    }
  }

  const SearchOptions options{config.node_budget, true};
  auto run_cell = [&](Cell& cell) {
    const auto start = std::chrono::steady_clock::now();
    MinResult r = run_strategy(*cell.strategy, cell.instance->group, cell.set, options);
    const auto stop = std::chrono::steady_clock::now();
    cell.row.solved = r.solved();
    cell.row.nodes = r.stats.nodes;
    cell.row.depth = r.stats.depth;
    cell.row.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, cells.size()));
  if (jobs == 1) {
    for (auto& cell : cells) run_cell(cell);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) run_cell(cells[i]);
      });
  }

  std::vector<ResultRow> rows;
  rows.reserve(cells.size());
  for (auto& cell : cells) rows.push_back(std::move(cell.row));
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << "family,instance,degree,strategy,fraction,seed,solved,nodes,depth,elapsed_ms\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.instance << ',' << r.degree << ',' << r.strategy << ',' << r.fraction
        << ',' << r.seed << ',' << (r.solved ? "true" : "false") << ',' << r.nodes << ',' << r.depth
        << ',' << std::fixed << std::setprecision(3) << r.elapsed_ms << std::defaultfloat << '\n';
  }
}

double median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
}

std::vector<StrategySummary> summarize(const std::vector<ResultRow>& rows) {
  // keyed by first appearance so the summary follows the row order
  std::vector<std::pair<std::string, std::size_t>> keys;
  std::map<std::pair<std::string, std::size_t>, std::vector<const ResultRow*>> groups;
  for (const auto& r : rows) {
    auto key = std::make_pair(r.strategy, r.fraction);
    auto& bucket = groups[key];
    if (bucket.empty()) keys.push_back(key);
    bucket.push_back(&r);
  }
  std::stable_sort(keys.begin(), keys.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });

  std::vector<StrategySummary> out;
  for (const auto& key : keys) {
    StrategySummary s;
    s.strategy = key.first;
    s.fraction = key.second;
    std::vector<double> nodes;
    for (const ResultRow* r : groups[key]) {
      ++s.runs;
      nodes.push_back(static_cast<double>(r->nodes));
      s.total_ms += r->elapsed_ms;
      if (r->solved) {
        ++s.solved;
        s.largest = std::max(s.largest, r->degree);
      }
    }
    s.median_nodes = median(std::move(nodes));
    out.push_back(std::move(s));
  }
  return out;
}

void write_summary(std::ostream& out, const std::vector<StrategySummary>& summary) {
  out << "strategy,fraction,runs,solved,median_nodes,largest,total_ms\n";
  for (const auto& s : summary)
    out << s.strategy << ',' << s.fraction << ',' << s.runs << ',' << s.solved << ',' << s.median_nodes
        << ',' << s.largest << ',' << std::fixed << std::setprecision(3) << s.total_ms
        << std::defaultfloat << '\n';
}

}  // namespace mincan
