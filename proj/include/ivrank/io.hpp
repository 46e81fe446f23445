#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ivrank/compare.hpp"
#include "ivrank/errors.hpp"
#include "ivrank/poset.hpp"
#include "ivrank/rank.hpp"

namespace ivrank {

struct EdgeDocument {
  std::vector<Edge> edges;
  std::string source_name;
  std::vector<std::size_t> line_numbers;  // per edge
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  std::size_t end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.emplace_back(text.substr(pos));
      break;
    }
    lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

/// One edge per non-blank line, child and parent separated by a single tab;
/// `#`-prefixed lines are comments. (child, parent) asserts child < parent.
inline EdgeDocument parse_edgelist(std::string_view text,
                                   const std::string& source_name = "") {
  EdgeDocument doc;
  doc.source_name = source_name;
  std::size_t lineno = 0;
  for (const std::string& raw : detail::split_lines(text)) {
    ++lineno;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(lineno, "expected exactly two tab-separated fields");
    }
    std::string child = line.substr(0, tab);
    std::string parent = line.substr(tab + 1);
    if (child.empty() || parent.empty()) {
      throw ParseError(lineno, "empty element id");
    }
    doc.edges.emplace_back(child, parent);
    doc.line_numbers.push_back(lineno);
  }
  return doc;
}

/// Minimal OBO subset: `[Term]` stanzas with `id:`, optional `name:`, and
/// `is_a:` lines (value before any `!` comment). Obsolete stanzas are skipped;
/// all other tags are ignored.
inline EdgeDocument parse_obo(std::string_view text,
                              const std::string& source_name = "") {
  EdgeDocument doc;
  doc.source_name = source_name;

  struct Stanza {
    std::string id;
    std::vector<std::pair<std::string, std::size_t>> is_a;  // target, line
    bool obsolete = false;
    bool is_term = false;
    std::size_t start_line = 0;
  };

  auto flush = [&](const Stanza& st) {
    if (!st.is_term || st.obsolete) return;
    if (st.id.empty() && !st.is_a.empty()) {
      throw ParseError(st.start_line, "[Term] stanza without an id");
    }
    for (const auto& [target, line] : st.is_a) {
      doc.edges.emplace_back(st.id, target);
      doc.line_numbers.push_back(line);
    }
  };

  Stanza current;
  bool in_stanza = false;
  std::size_t lineno = 0;
  for (const std::string& raw : detail::split_lines(text)) {
    ++lineno;
    std::string line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (in_stanza) flush(current);
      current = Stanza{};
      current.is_term = line == "[Term]";
      current.start_line = lineno;
      in_stanza = true;
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string tag = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    std::size_t bang = value.find('!');
    if (bang != std::string::npos) value = value.substr(0, bang);
    value = detail::trim(value);
    if (tag == "id") {
      if (!in_stanza) throw ParseError(lineno, "id outside of a stanza");
      current.id = value;
    } else if (tag == "is_a") {
      if (!in_stanza) throw ParseError(lineno, "is_a outside of a stanza");
      if (!current.is_term) continue;
      if (current.id.empty()) {
        throw ParseError(lineno, "is_a before the stanza id");
      }
      if (value.empty()) throw ParseError(lineno, "is_a with empty target");
      current.is_a.emplace_back(value, lineno);
    } else if (tag == "is_obsolete") {
      if (value == "true") current.obsolete = true;
    }
  }
  if (in_stanza) flush(current);
  return doc;
}

/// Rank statistics table, rows ordered by (r_top, r_bottom, element).
inline std::string write_rank_csv(const RankTable& rt) {
  std::vector<const RankRow*> rows;
  for (const auto& r : rt.rows) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(), [](const RankRow* a, const RankRow* b) {
    if (a->r_top != b->r_top) return a->r_top < b->r_top;
    if (a->r_bottom != b->r_bottom) return a->r_bottom < b->r_bottom;
    return a->id < b->id;
  });
  std::string out =
      "element,up_height,down_height,r_top,r_bottom,width,centrality,midpoint,"
      "freese\n";
  for (const RankRow* r : rows) {
    out += detail::csv_field(r->id) + ',' + std::to_string(r->up_height) + ',' +
           std::to_string(r->down_height) + ',' + std::to_string(r->r_top) +
           ',' + std::to_string(r->r_bottom) + ',' + std::to_string(r->width) +
           ',' + std::to_string(r->centrality) + ',' +
           midpoint_decimal(r->midpoint_doubled) + ',' +
           std::to_string(r->freese) + '\n';
  }
  return out;
}

inline std::string write_comparison_csv(const std::vector<ComparisonRecord>& matrix) {
  std::string out = "a,b,relation,alpha_lo,alpha_hi,sep_lo,sep_hi,sep_width\n";
  for (const auto& rec : matrix) {
    out += detail::csv_field(rec.a) + ',' + detail::csv_field(rec.b) + ',' +
           relation_name(rec.relation) + ',' + std::to_string(rec.alpha.lo) +
           ',' + std::to_string(rec.alpha.hi) + ',' +
           std::to_string(rec.sep.lo) + ',' + std::to_string(rec.sep.hi) + ',' +
           std::to_string(rec.sep_width) + '\n';
  }
  return out;
}

inline nlohmann::ordered_json interval_json(Interval x) {
  return nlohmann::ordered_json::array({x.lo, x.hi});
}

/// Full report: meta (height, chain count, gradedness, spindle), per-element
/// rank rows, and the comparison records. Key order and formatting are fixed
/// so output is byte-deterministic.
inline std::string write_report_json(const Poset& p, const RankTable& rt,
                                     const std::vector<ComparisonRecord>& matrix,
                                     std::uint64_t chain_cap = 1000000) {
  nlohmann::ordered_json doc;
  ChainSet chains = p.maximal_chains(chain_cap);
  doc["meta"] = {
      {"element_count", p.size()},
      {"height", p.height()},
      {"chain_count", chains.count},
      {"graded", p.is_graded()},
      {"spindle", p.spindle_elements()},
      {"bottom", p.bottom()},
      {"top", p.top()},
  };
  doc["elements"] = nlohmann::ordered_json::array();
  for (const auto& r : rt.rows) {
    doc["elements"].push_back({
        {"id", r.id},
        {"synthetic", r.synthetic},
        {"up_height", r.up_height},
        {"down_height", r.down_height},
        {"rank", interval_json(r.rank())},
        {"width", r.width},
        {"centrality", r.centrality},
        {"midpoint", midpoint_decimal(r.midpoint_doubled)},
        {"freese", r.freese},
        {"precise", r.precise},
    });
  }
  doc["comparisons"] = nlohmann::ordered_json::array();
  for (const auto& rec : matrix) {
    doc["comparisons"].push_back({
        {"a", rec.a},
        {"b", rec.b},
        {"relation", relation_name(rec.relation)},
        {"alpha", interval_json(rec.alpha)},
        {"sep", interval_json(rec.sep)},
        {"sep_width", rec.sep_width},
        {"same_rank_group", rec.same_rank_group},
    });
  }
  return doc.dump(2) + "\n";
}

/// Midpoint-aligned Hasse layout: each node's vertical coordinate is pinned
/// to minus its rank midpoint (rank 0 uppermost), spindle cover edges are
/// bold, and every cover edge carries its separation and width.
inline std::string write_layout_dot(const Poset& p, const RankTable& rt) {
  std::ostringstream out;
  out << "digraph poset {\n";
  out << "  graph [splines=line];\n";
  out << "  node [shape=box];\n";

  // Elements sharing a midpoint are spread evenly in lexicographic order.
  std::map<int, std::vector<const RankRow*>> by_mid;
  for (const auto& r : rt.rows) by_mid[r.midpoint_doubled].push_back(&r);
  std::map<std::string, std::string> xcoord;
  for (auto& [mid, group] : by_mid) {
    std::sort(group.begin(), group.end(),
              [](const RankRow* a, const RankRow* b) { return a->id < b->id; });
    int k = static_cast<int>(group.size());
    for (int i = 0; i < k; ++i) {
      // Centered positions in half-unit steps: 2*i - (k-1) halves.
      xcoord[group[i]->id] = midpoint_decimal(2 * i - (k - 1));
    }
  }
  for (const auto& r : rt.rows) {
    out << "  \"" << r.id << "\" [label=\"" << r.id << " "
        << to_string(r.rank()) << "\", pos=\"" << xcoord[r.id] << ","
        << midpoint_decimal(-r.midpoint_doubled) << "!\"];\n";
  }
  for (const auto& [child, parent] : p.cover_edges()) {
    ComparisonRecord rec = compare_pair(rt, parent, child);
    bool spindle_edge =
        p.down_height(child) + p.up_height(parent) == p.height();
    out << "  \"" << child << "\" -> \"" << parent << "\" [label=\"‖·‖="
        << to_string(rec.sep) << " W=" << rec.sep_width << "\"";
    if (spindle_edge) out << ", style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ivrank
