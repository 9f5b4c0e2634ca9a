#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <ostream>

#include "mincan/bench.hpp"
#include "mincan/canimage.hpp"
#include "mincan/io.hpp"
#include "mincan/minimage.hpp"
#include "mincan/oracle.hpp"
#include "mincan/ordering.hpp"

namespace mincan::cli {

namespace {

using nlohmann::json;

// Failure tied to a flag; reported as "<flag>: <message>".
struct FlagError : std::runtime_error {
  FlagError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupArgs {
  std::string file;
  std::size_t degree = 0;
  std::vector<std::string> gens;
};

void add_group_flags(CLI::App& cmd, GroupArgs& g) {
  cmd.add_option("--group", g.file, "group file");
  cmd.add_option("--degree", g.degree, "degree for inline generators");
  cmd.add_option("--gens", g.gens, "inline generators in cycle notation, ';' separated")->delimiter(';');
}

PermGroup load_group(const GroupArgs& g) {
  if (!g.file.empty() && !g.gens.empty()) throw FlagError("--group", "give either --group or --gens, not both");
  if (!g.file.empty()) return read_group_file(g.file);
  if (g.degree == 0) throw FlagError("--degree", "required with --gens (or use --group)");
  std::vector<Permutation> gens;
  for (const auto& text : g.gens) {
    try {
      gens.push_back(parse_cycles(text, g.degree));
    } catch (const DomainError& e) {
      throw FlagError("--gens", e.what());
    }
  }
  return PermGroup(g.degree, std::move(gens));
}

template <class F>
auto flag_context(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw FlagError(flag, e.what());
  } catch (const std::invalid_argument& e) {
    throw FlagError(flag, e.what());
  }
}

json result_json(const MinResult& r) {
  return json{{"image", r.image.one_based()},
              {"witness", format_cycles(r.witness)},
              {"nodes", r.stats.nodes},
              {"depth", r.stats.depth}};
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw FlagError("--sizes", "bad number '" + std::string(s) + "'");
    return v;
  };
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      std::size_t lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
      if (lo > hi) throw FlagError("--sizes", "empty range '" + std::string(item) + "'");
      for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(number(item));
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal and canonical images of sets under permutation groups", "mincan"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "print version and composition convention");

  GroupArgs group_args;
  std::string set_text, order_text = "natural", strategy_text = "rareorbitplusmin";
  std::uint64_t node_budget = 0, seed = 1;
  std::size_t samples = 100;

  auto* min_cmd = app.add_subcommand("min", "minimal image under an ordering");
  add_group_flags(*min_cmd, group_args);
  min_cmd->add_option("--set", set_text, "1-based set, e.g. 2,3,5")->required();
  min_cmd->add_option("--order", order_text, "natural|reverse|fixedminorbit|fixedmaxorbit|perm:<cycles>");
  min_cmd->add_option("--node-budget", node_budget, "0 for unlimited");

  auto* can_cmd = app.add_subcommand("canonical", "canonical image by a dynamic strategy");
  add_group_flags(*can_cmd, group_args);
  can_cmd->add_option("--set", set_text)->required();
  can_cmd->add_option("--strategy", strategy_text);
  can_cmd->add_option("--order", order_text);
  can_cmd->add_option("--node-budget", node_budget);

  auto* check_cmd = app.add_subcommand("check", "verify a strategy against the oracles");
  add_group_flags(*check_cmd, group_args);
  check_cmd->add_option("--set", set_text)->required();
  check_cmd->add_option("--strategy", strategy_text);
  check_cmd->add_option("--samples", samples, "random samples when the orbit is too large");
  check_cmd->add_option("--seed", seed);

  ExperimentConfig config;
  std::string family = "grid", sizes_text, fractions_text = "2,4,8", out_path;
  std::vector<std::string> strategy_names{"minimage-natural", "fixedminorbit", "rareorbitplusmin"};
  std::vector<std::string> files;
  bool no_conjugate = false;
  auto* bench_cmd = app.add_subcommand("bench", "run a seeded experiment and write CSV");
  bench_cmd->add_option("--family", family, "grid|mset|file");
  bench_cmd->add_option("--sizes", sizes_text, "e.g. 3..12 or 4,6,8");
  bench_cmd->add_option("--m", config.m, "subset size for mset");
  bench_cmd->add_option("--files", files, "group files for family=file")->delimiter(',');
  bench_cmd->add_option("--fractions", fractions_text);
  bench_cmd->add_option("--strategies", strategy_names)->delimiter(',');
  bench_cmd->add_option("--seed", config.seed);
  bench_cmd->add_option("--node-budget", config.node_budget);
  bench_cmd->add_option("--repeats", config.repeats);
  bench_cmd->add_option("--jobs", config.jobs);
  bench_cmd->add_flag("--no-conjugate", no_conjugate, "search the groups as generated");
  bench_cmd->add_option("--out", out_path, "CSV path; stdout when absent");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : domain_error;
  }

  try {
    if (version) {
      out << "mincan " << kVersion << " (composition: left-to-right)\n";
      return ok;
    }
    if (min_cmd->parsed() || can_cmd->parsed() || check_cmd->parsed()) {
      PermGroup group = load_group(group_args);
      PointSet set = flag_context("--set", [&] { return parse_set(set_text, group.degree()); });
      const SearchOptions options{node_budget, true};

      if (check_cmd->parsed()) {
        Strategy strategy = flag_context("--strategy", [&] { return parse_strategy(strategy_text); });
        ContractReport report = check_canonical_contract(group, set, strategy, samples, {}, seed);
        json violations = json::array();
        for (const auto& v : report.violations)
          violations.push_back({{"kind", v.kind},
                                {"input", v.input.one_based()},
                                {"image", v.image.one_based()},
                                {"reference", v.reference.one_based()}});
        json j{{"strategy", strategy_name(strategy)},
               {"checked", report.checked},
               {"orbit_size", report.orbit_size},
               {"violation_count", report.violation_count},
               {"violations", violations},
               {"passed", report.passed()}};
        out << j.dump() << '\n';
        return report.passed() ? ok : domain_error;
      }

      BaseOrdering ord = flag_context("--order", [&] { return parse_ordering(order_text, group); });
      MinResult r;
      if (min_cmd->parsed()) {
        r = minimal_image(group, set, ord, options);
      } else {
        Strategy strategy = flag_context("--strategy", [&] { return parse_strategy(strategy_text); });
        r = canonical_image(group, set, strategy, ord, options);
      }
      if (!r.solved()) throw BudgetError("node budget of " + std::to_string(node_budget) + " exhausted");
      out << result_json(r).dump() << '\n';
      return ok;
    }

    if (bench_cmd->parsed()) {
      if (family == "grid") config.family = ExperimentConfig::Family::grid;
      else if (family == "mset") config.family = ExperimentConfig::Family::mset;
      else if (family == "file") config.family = ExperimentConfig::Family::file;
      else throw FlagError("--family", "expected grid, mset or file, got '" + family + "'");
      if (config.family == ExperimentConfig::Family::file) {
        if (files.empty()) throw FlagError("--files", "required for family=file");
        config.files.assign(files.begin(), files.end());
      } else {
        if (sizes_text.empty()) throw FlagError("--sizes", "required for family=" + family);
        config.sizes = parse_sizes(sizes_text);
      }
      config.fractions.clear();
      for (auto f : parse_sizes(fractions_text)) {
        if (f == 0) throw FlagError("--fractions", "must be positive");
        config.fractions.push_back(f);
      }
      for (const auto& name : strategy_names)
        config.strategies.push_back(flag_context("--strategies", [&] { return parse_bench_strategy(name); }));
      config.conjugate = !no_conjugate;

      auto rows = flag_context("--sizes", [&] { return run_suite(config); });
      if (out_path.empty()) {
        write_csv(out, rows);
        write_summary(err, summarize(rows));
      } else {
        std::ofstream file(out_path);
        if (!file) throw FlagError("--out", "cannot open '" + out_path + "'");
        write_csv(file, rows);
        write_summary(out, summarize(rows));
      }
      return ok;
    }

    out << app.help();
    return ok;
  } catch (const BudgetError& e) {
    err << "mincan: " << e.what() << '\n';
    return budget_exhausted;
  } catch (const std::exception& e) {
    err << "mincan: " << e.what() << '\n';
    return domain_error;
  }
}

}  // namespace mincan::cli
