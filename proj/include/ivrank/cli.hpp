#pragma once

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivrank/compare.hpp"
#include "ivrank/errors.hpp"
#include "ivrank/io.hpp"
#include "ivrank/poset.hpp"
#include "ivrank/rank.hpp"

namespace ivrank {

struct CliConfig {
  std::string command;
  std::string input_path;
  std::string input_format = "auto";  // auto|edgelist|obo
  std::string output_format;          // json|csv|dot; per-command default
  std::string pairs = "all";          // all|covers
  std::string order = "weak-dual";
  bool strict = false;
  std::uint64_t chain_cap = 1000000;
  int max_enum_elements = 10;
  std::string bottom_name = "_BOT_";
  std::string top_name = "_TOP_";
  std::string out_path;
  std::string ranks_path;
  bool require_full_enumeration = false;
  bool stdout_is_tty = false;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool looks_like_obo(const std::string& path, const std::string& text) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".obo") return true;
  return text.find("[Term]") != std::string::npos;
}

inline EdgeDocument parse_input(const CliConfig& cfg, const std::string& text) {
  std::string format = cfg.input_format;
  if (format == "auto") {
    format = looks_like_obo(cfg.input_path, text) ? "obo" : "edgelist";
  }
  if (format == "obo") return parse_obo(text, cfg.input_path);
  return parse_edgelist(text, cfg.input_path);
}

inline OrderTag parse_order_tag(const std::string& name) {
  if (name == "weak") return OrderTag::Weak;
  if (name == "weak-dual") return OrderTag::WeakDual;
  if (name == "strong") return OrderTag::Strong;
  if (name == "strong-dual") return OrderTag::StrongDual;
  if (name == "subset") return OrderTag::Subset;
  if (name == "superset") return OrderTag::Superset;
  throw Error("unknown order '" + name + "'");
}

inline Poset build(const CliConfig& cfg, const EdgeDocument& doc) {
  BoundingOptions opts;
  opts.bottom_name = cfg.bottom_name;
  opts.top_name = cfg.top_name;
  return Poset::from_edges(doc.edges, opts);
}

}  // namespace detail

/// Runs one CLI command against the given output streams. Exit codes:
/// 0 success, 1 parse/structural error, 2 validation failed, 3 resource limit.
inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    EdgeDocument doc = detail::parse_input(cfg, detail::read_file(cfg.input_path));
    Poset p = detail::build(cfg, doc);

    std::string payload;
    int code = 0;

    if (cfg.command == "rank") {
      RankTable rt = standard_interval_rank(p);
      std::string format = cfg.output_format;
      if (format.empty()) format = cfg.stdout_is_tty ? "csv" : "json";
      payload = format == "csv"
                    ? write_rank_csv(rt)
                    : write_report_json(p, rt, {}, cfg.chain_cap);
    } else if (cfg.command == "compare") {
      RankTable rt = standard_interval_rank(p);
      auto matrix = comparison_matrix(
          p, rt, cfg.pairs == "covers" ? PairScope::Covers : PairScope::All);
      std::string format = cfg.output_format;
      if (format.empty()) format = cfg.stdout_is_tty ? "csv" : "json";
      payload = format == "csv"
                    ? write_comparison_csv(matrix)
                    : write_report_json(p, rt, matrix, cfg.chain_cap);
    } else if (cfg.command == "layout") {
      RankTable rt = standard_interval_rank(p);
      payload = write_layout_dot(p, rt);
    } else if (cfg.command == "check") {
      RankAssignment ra;
      ra.order = detail::parse_order_tag(cfg.order);
      nlohmann::json ranks = nlohmann::json::parse(detail::read_file(cfg.ranks_path));
      for (auto& [id, value] : ranks.items()) {
        if (!value.is_array() || value.size() != 2) {
          throw Error("rank for '" + id + "' must be a [lo, hi] pair");
        }
        ra.intervals[id] = make_interval(value[0].get<int>(), value[1].get<int>());
      }
      ValidationReport report = validate_rank_assignment(p, ra, cfg.strict);
      if (report.valid()) {
        payload = "valid\n";
      } else {
        std::string text;
        for (const auto& v : report.violations) {
          text += v.a + " < " + v.b + ": " + v.reason + "\n";
        }
        payload = text;
        code = 2;
      }
    } else if (cfg.command == "enumerate") {
      auto functions = enumerate_strict_rank_functions(
          p, detail::parse_order_tag(cfg.order), cfg.max_enum_elements);
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& ra : functions) {
        nlohmann::ordered_json one;
        for (const auto& [id, interval] : ra.intervals) {
          one[id] = interval_json(interval);
        }
        arr.push_back(one);
      }
      payload = arr.dump(2) + "\n";
    } else if (cfg.command == "stats") {
      RankTable rt = standard_interval_rank(p);
      ChainSet chains = p.maximal_chains(cfg.chain_cap);
      if (chains.truncated && cfg.require_full_enumeration) {
        throw ChainCapExceeded("maximal chain enumeration exceeded cap of " +
                               std::to_string(cfg.chain_cap));
      }
      std::ostringstream ss;
      ss << "elements: " << p.size() << "\n";
      ss << "height: " << p.height() << "\n";
      ss << "maximal chains: " << chains.count << "\n";
      ss << "graded: " << (p.is_graded() ? "true" : "false") << "\n";
      ss << "spindle:";
      for (const auto& id : p.spindle_elements()) ss << " " << id;
      ss << "\n";
      std::map<int, int> histogram;
      for (const auto& r : rt.rows) ++histogram[r.width];
      ss << "width histogram:";
      for (const auto& [w, count] : histogram) {
        ss << " " << w << ":" << count;
      }
      ss << "\n";
      payload = ss.str();
    } else {
      throw Error("unknown command '" + cfg.command + "'");
    }

    if (!cfg.out_path.empty()) {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw Error("cannot open output file '" + cfg.out_path + "'");
      file << payload;
    } else {
      out << payload;
    }
    return code;
  } catch (const PosetTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ChainCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

/// Argument parsing front end shared by the binary and the tests.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err, bool stdout_is_tty = false) {
  CLI::App app{"Interval-valued rank analysis for DAG hierarchies"};
  app.require_subcommand(1);

  CliConfig cfg;
  cfg.stdout_is_tty = stdout_is_tty;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input_path, "input hierarchy file")
        ->required();
    sub->add_option("--format", cfg.input_format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "obo"}));
    sub->add_option("--bottom-name", cfg.bottom_name, "synthetic bottom id");
    sub->add_option("--top-name", cfg.top_name, "synthetic top id");
    sub->add_option("--out", cfg.out_path, "write output to a file");
  };

  CLI::App* rank = app.add_subcommand("rank", "per-element interval rank table");
  add_common(rank);
  rank->add_option("--output", cfg.output_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* compare = app.add_subcommand("compare", "pairwise rank comparisons");
  add_common(compare);
  compare->add_option("--output", cfg.output_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  compare->add_option("--pairs", cfg.pairs, "pair scope")
      ->check(CLI::IsMember({"all", "covers"}));

  CLI::App* layout = app.add_subcommand("layout", "midpoint-aligned DOT layout");
  add_common(layout);

  CLI::App* check = app.add_subcommand("check", "validate a rank assignment");
  add_common(check);
  check->add_option("--ranks", cfg.ranks_path, "JSON map element -> [lo, hi]")
      ->required();
  check->add_option("--order", cfg.order, "interval order")
      ->check(CLI::IsMember({"weak", "weak-dual", "strong", "strong-dual",
                             "subset", "superset"}));
  check->add_flag("--strict", cfg.strict, "require strict endpoint monotonicity");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "all strict interval rank functions");
  add_common(enumerate);
  enumerate->add_option("--order", cfg.order, "interval order")
      ->check(CLI::IsMember({"weak", "weak-dual", "strong", "strong-dual",
                             "subset", "superset"}));
  enumerate->add_option("--max-elements", cfg.max_enum_elements,
                        "enumeration size limit");

  CLI::App* stats = app.add_subcommand("stats", "summary statistics");
  add_common(stats);
  stats->add_option("--chain-cap", cfg.chain_cap, "chain enumeration cap");
  stats->add_flag("--require-full-enumeration", cfg.require_full_enumeration,
                  "fail when the chain cap truncates enumeration");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream unused;
    int rc = app.exit(e, unused, err);
    return rc == 0 ? 0 : 1;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
  }
  return run(cfg, out, err);
}

}  // namespace ivrank
