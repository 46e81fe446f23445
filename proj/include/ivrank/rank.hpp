#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ivrank/errors.hpp"
#include "ivrank/interval.hpp"
#include "ivrank/poset.hpp"

namespace ivrank {

/// Per-element record of the standard interval rank and its derived
/// quantities.
struct RankRow {
  std::string id;
  bool synthetic = false;
  int up_height = 0;
  int down_height = 0;
  int r_top = 0;     // h(up a) - 1
  int r_bottom = 0;  // h - h(down a)
  int width = 0;
  int centrality = 0;
  int midpoint_doubled = 0;
  int freese = 0;
  int proc_top = 0;     // peeling layer from the maximal elements
  int proc_bottom = 0;  // peeling layer from the minimal elements
  bool precise = false;

  Interval rank() const { return Interval{r_top, r_bottom}; }
};

struct RankTable {
  int height = 0;
  std::vector<RankRow> rows;  // lexicographic by id

  const RankRow& row(const std::string& id) const {
    for (const auto& r : rows) {
      if (r.id == id) return r;
    }
    throw UnknownElement("unknown element '" + id + "'");
  }

  bool has(const std::string& id) const {
    return std::any_of(rows.begin(), rows.end(),
                       [&](const RankRow& r) { return r.id == id; });
  }
};

/// Layer indices from iteratively peeling maximal elements; layer 0 holds
/// Max(P). Returned aligned with p.ids().
inline std::vector<int> procedural_rank_top(const Poset& p) {
  int n = p.size();
  std::vector<int> rank(n, -1);
  std::vector<int> remaining_above(n, 0);
  for (int a = 0; a < n; ++a) {
    remaining_above[a] = static_cast<int>(p.up_covers_at(a).size());
  }
  std::vector<int> layer;
  for (int a = 0; a < n; ++a) {
    if (remaining_above[a] == 0) layer.push_back(a);
  }
  int k = 0;
  while (!layer.empty()) {
    std::vector<int> next;
    for (int a : layer) rank[a] = k;
    for (int a : layer) {
      for (int b : p.down_covers_at(a)) {
        if (--remaining_above[b] == 0) next.push_back(b);
      }
    }
    layer = std::move(next);
    ++k;
  }
  return rank;
}

/// Dual peeling, from the minimal elements upward.
inline std::vector<int> procedural_rank_bottom(const Poset& p) {
  int n = p.size();
  std::vector<int> rank(n, -1);
  std::vector<int> remaining_below(n, 0);
  for (int a = 0; a < n; ++a) {
    remaining_below[a] = static_cast<int>(p.down_covers_at(a).size());
  }
  std::vector<int> layer;
  for (int a = 0; a < n; ++a) {
    if (remaining_below[a] == 0) layer.push_back(a);
  }
  int k = 0;
  while (!layer.empty()) {
    std::vector<int> next;
    for (int a : layer) rank[a] = k;
    for (int a : layer) {
      for (int b : p.up_covers_at(a)) {
        if (--remaining_below[b] == 0) next.push_back(b);
      }
    }
    layer = std::move(next);
    ++k;
  }
  return rank;
}

inline int freese_rank(const Poset& p, const std::string& a) {
  return p.height() + p.down_height(a) - p.up_height(a);
}

/// The standard interval rank [h(up a)-1, h - h(down a)] together with
/// width, centrality, midpoint, Freese rank, and both procedural ranks.
inline RankTable standard_interval_rank(const Poset& p) {
  RankTable rt;
  rt.height = p.height();
  auto proc_top = procedural_rank_top(p);
  auto proc_bottom = procedural_rank_bottom(p);
  for (int i = 0; i < p.size(); ++i) {
    const std::string& id = p.ids()[i];
    RankRow row;
    row.id = id;
    row.synthetic = p.is_synthetic(id);
    row.up_height = p.up_height_at(i);
    row.down_height = p.down_height_at(i);
    row.r_top = row.up_height - 1;
    row.r_bottom = rt.height - row.down_height;
    row.width = row.r_bottom - row.r_top;
    row.centrality = row.up_height + row.down_height - 1;
    row.midpoint_doubled = row.r_top + row.r_bottom;
    row.freese = rt.height + row.down_height - row.up_height;
    row.proc_top = proc_top[i];
    row.proc_bottom = proc_bottom[i];
    row.precise = row.width == 0;
    rt.rows.push_back(row);
  }
  return rt;
}

/// Candidate interval orders for rank functions.
enum class OrderTag { Weak, WeakDual, Strong, StrongDual, Subset, Superset };

inline const char* order_tag_name(OrderTag t) {
  switch (t) {
    case OrderTag::Weak: return "weak";
    case OrderTag::WeakDual: return "weak-dual";
    case OrderTag::Strong: return "strong";
    case OrderTag::StrongDual: return "strong-dual";
    case OrderTag::Subset: return "subset";
    case OrderTag::Superset: return "superset";
  }
  return "?";
}

struct RankAssignment {
  std::map<std::string, Interval> intervals;
  OrderTag order = OrderTag::WeakDual;
};

/// Assembles [proc_top, h - proc_bottom - 1]; coincides with the standard
/// interval rank on every bounded poset.
inline RankAssignment procedural_interval_rank(const Poset& p) {
  RankAssignment ra;
  ra.order = OrderTag::WeakDual;
  auto top = procedural_rank_top(p);
  auto bottom = procedural_rank_bottom(p);
  for (int i = 0; i < p.size(); ++i) {
    ra.intervals[p.ids()[i]] =
        Interval{top[i], p.height() - bottom[i] - 1};
  }
  return ra;
}

struct ValidationReport {
  struct Violation {
    std::string a, b;
    std::string reason;
  };
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

namespace detail {

/// The strict relation R(a) strict-rel R(b) required for a < b under a tag.
inline bool strict_relation_holds(OrderTag tag, Interval x, Interval y) {
  switch (tag) {
    case OrderTag::Weak: return leq_weak(x, y) && x != y;
    case OrderTag::WeakDual: return leq_weak(y, x) && x != y;
    case OrderTag::Strong: return x.hi < y.lo;
    case OrderTag::StrongDual: return y.hi < x.lo;
    case OrderTag::Subset: return subset_of(x, y) && x != y;
    case OrderTag::Superset: return subset_of(y, x) && x != y;
  }
  return false;
}

/// Required strict endpoint directions per tag: +1 strictly isotone,
/// -1 strictly antitone. For the strong orders only one direction is
/// compatible; no converse is claimed.
inline std::pair<int, int> endpoint_directions(OrderTag tag) {
  switch (tag) {
    case OrderTag::Weak:
    case OrderTag::Strong: return {+1, +1};
    case OrderTag::WeakDual:
    case OrderTag::StrongDual: return {-1, -1};
    case OrderTag::Subset: return {-1, +1};
    case OrderTag::Superset: return {+1, -1};
  }
  return {0, 0};
}

inline bool endpoints_strict(OrderTag tag, Interval x, Interval y) {
  auto [dlo, dhi] = endpoint_directions(tag);
  bool lo_ok = dlo > 0 ? x.lo < y.lo : x.lo > y.lo;
  bool hi_ok = dhi > 0 ? x.hi < y.hi : x.hi > y.hi;
  return lo_ok && hi_ok;
}

}  // namespace detail

/// Checks that an assignment is a strict order homomorphism into the chosen
/// interval order; with strict=true additionally requires strict endpoint
/// monotonicity in the direction the order prescribes. Reports every
/// violating pair rather than failing fast.
inline ValidationReport validate_rank_assignment(const Poset& p,
                                                 const RankAssignment& ra,
                                                 bool strict) {
  for (const auto& id : p.ids()) {
    if (!ra.intervals.count(id)) {
      throw IncompleteAssignment("no interval assigned to element '" + id + "'");
    }
  }
  ValidationReport report;
  for (const auto& a : p.ids()) {
    for (const auto& b : p.ids()) {
      if (a == b || !p.leq(a, b)) continue;
      Interval x = ra.intervals.at(a);
      Interval y = ra.intervals.at(b);
      if (!detail::strict_relation_holds(ra.order, x, y)) {
        report.violations.push_back(
            {a, b,
             "R(" + a + ")=" + to_string(x) + " is not strictly below R(" + b +
                 ")=" + to_string(y) + " in the " + order_tag_name(ra.order) +
                 " order"});
      } else if (strict && !detail::endpoints_strict(ra.order, x, y)) {
        report.violations.push_back(
            {a, b,
             "endpoints of R(" + a + ")=" + to_string(x) + " and R(" + b +
                 ")=" + to_string(y) + " are not strictly monotone for the " +
                 order_tag_name(ra.order) + " order"});
      }
    }
  }
  return report;
}

/// Exhaustively enumerates the strict interval rank functions with endpoints
/// in [0, h-1]. Backtracking over elements in decreasing centrality order;
/// results are returned in a deterministic order.
inline std::vector<RankAssignment> enumerate_strict_rank_functions(
    const Poset& p, OrderTag tag, int max_elements = 10) {
  if (p.size() > max_elements) {
    throw PosetTooLarge("poset has " + std::to_string(p.size()) +
                        " elements; enumeration limit is " +
                        std::to_string(max_elements));
  }
  int n = p.size();
  int h = p.height();
  std::vector<Interval> candidates;
  for (int lo = 0; lo <= h - 1; ++lo) {
    for (int hi = lo; hi <= h - 1; ++hi) candidates.push_back(Interval{lo, hi});
  }

  // Most-constrained elements first: spindle elements are forced early.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ca = p.up_height_at(a) + p.down_height_at(a);
    int cb = p.up_height_at(b) + p.down_height_at(b);
    if (ca != cb) return ca > cb;
    return p.ids()[a] < p.ids()[b];
  });

  std::vector<Interval> assigned(n);
  std::vector<bool> has(n, false);
  std::vector<RankAssignment> out;

  auto compatible = [&](int elem, Interval value) {
    for (int other = 0; other < n; ++other) {
      if (!has[other]) continue;
      const std::string& ea = p.ids()[elem];
      const std::string& eb = p.ids()[other];
      bool below = p.leq(ea, eb);
      bool above = p.leq(eb, ea);
      if (!below && !above) continue;
      Interval x = below ? value : assigned[other];
      Interval y = below ? assigned[other] : value;
      if (!detail::strict_relation_holds(tag, x, y)) return false;
      if (!detail::endpoints_strict(tag, x, y)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      RankAssignment ra;
      ra.order = tag;
      for (int i = 0; i < n; ++i) ra.intervals[p.ids()[i]] = assigned[i];
      out.push_back(std::move(ra));
      return;
    }
    int elem = order[pos];
    for (Interval value : candidates) {
      if (!compatible(elem, value)) continue;
      assigned[elem] = value;
      has[elem] = true;
      self(self, pos + 1);
      has[elem] = false;
    }
  };
  search(search, 0);

  std::sort(out.begin(), out.end(),
            [](const RankAssignment& a, const RankAssignment& b) {
              auto lhs = a.intervals.begin();
              auto rhs = b.intervals.begin();
              for (; lhs != a.intervals.end(); ++lhs, ++rhs) {
                if (lhs->second.lo != rhs->second.lo)
                  return lhs->second.lo < rhs->second.lo;
                if (lhs->second.hi != rhs->second.hi)
                  return lhs->second.hi < rhs->second.hi;
              }
              return false;
            });
  return out;
}

/// Classical scalar rank, defined only on graded posets: rho(top) = 0 with
/// unit decrements across covers. Returned aligned with p.ids().
inline std::optional<std::vector<int>> classical_rank(const Poset& p) {
  if (!p.is_graded()) return std::nullopt;
  std::vector<int> rho(p.size());
  for (int i = 0; i < p.size(); ++i) rho[i] = p.up_height_at(i) - 1;
  return rho;
}

}  // namespace ivrank
