#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ivrank/errors.hpp"

namespace ivrank {

using Edge = std::pair<std::string, std::string>;  // (child, parent), child < parent

struct BoundingOptions {
  std::string bottom_name = "_BOT_";
  std::string top_name = "_TOP_";
};

/// Maximal chains of a bounded poset, each saturated bottom to top.
/// `count` is always exact (path-counting DP) even when the explicit list is
/// truncated at the enumeration cap.
struct ChainSet {
  std::vector<std::vector<std::string>> chains;
  std::uint64_t count = 0;
  bool truncated = false;
};

/// Finite bounded poset built from DAG edge data.
///
/// Construction takes the reflexive-transitive closure of the input edges,
/// attaches synthetic bounds where the input has several minimal or maximal
/// elements, recomputes cover edges by transitive reduction, and caches
/// longest-chain heights. Immutable afterwards; all queries are read-only.
class Poset {
 public:
  static Poset from_edges(const std::vector<Edge>& edges,
                          const BoundingOptions& options = {}) {
    if (edges.empty()) throw TooSmall("edge list is empty");

    std::vector<std::string> ids;
    {
      std::set<std::string> seen;
      for (const auto& [child, parent] : edges) {
        if (child.empty() || parent.empty()) {
          throw ParseError(0, "empty element id in edge list");
        }
        if (child == parent) {
          throw CycleDetected("self-loop at element '" + child + "'");
        }
        seen.insert(child);
        seen.insert(parent);
      }
      ids.assign(seen.begin(), seen.end());
    }

    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) index[ids[i]] = i;

    int n = static_cast<int>(ids.size());
    std::vector<std::set<int>> up(n);  // raw child -> parent adjacency
    for (const auto& [child, parent] : edges) {
      up[index[child]].insert(index[parent]);
    }

    detect_cycle(ids, up);

    // Synthetic bounds below all minimal / above all maximal elements.
    std::vector<bool> has_below(n, false), has_above(n, false);
    for (int a = 0; a < n; ++a) {
      for (int b : up[a]) {
        has_above[a] = true;
        has_below[b] = true;
      }
    }
    std::vector<int> minimals, maximals;
    for (int a = 0; a < n; ++a) {
      if (!has_below[a]) minimals.push_back(a);
      if (!has_above[a]) maximals.push_back(a);
    }

    std::vector<bool> synthetic(n, false);
    auto add_bound = [&](const std::string& name, const std::vector<int>& frontier,
                         bool below) {
      if (index.count(name)) {
        throw DuplicateId("synthetic bound id '" + name +
                          "' collides with an element of the input");
      }
      int id = n++;
      ids.push_back(name);
      index[name] = id;
      up.emplace_back();
      synthetic.push_back(true);
      for (int a : frontier) {
        if (below) {
          up[id].insert(a);
        } else {
          up[a].insert(id);
        }
      }
      return id;
    };
    if (minimals.size() > 1) add_bound(options.bottom_name, minimals, true);
    if (maximals.size() > 1) add_bound(options.top_name, maximals, false);

    if (n < 2) throw TooSmall("poset has fewer than 2 elements after bounding");

    // Re-sort lexicographically so outputs are deterministic.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ids[a] < ids[b]; });
    std::vector<int> rename(n);
    for (int i = 0; i < n; ++i) rename[order[i]] = i;

    Poset p;
    p.ids_.resize(n);
    p.synthetic_.resize(n);
    std::vector<std::set<int>> up2(n);
    for (int old = 0; old < n; ++old) {
      p.ids_[rename[old]] = ids[old];
      p.synthetic_[rename[old]] = synthetic[old];
      for (int q : up[old]) up2[rename[old]].insert(rename[q]);
    }
    for (int i = 0; i < n; ++i) p.index_[p.ids_[i]] = i;

    p.build_closure(up2);
    p.build_covers();
    p.build_heights();
    return p;
  }

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& bottom() const { return ids_[bottom_]; }
  const std::string& top() const { return ids_[top_]; }
  int height() const { return height_; }
  bool is_synthetic(const std::string& a) const { return synthetic_[idx(a)]; }

  int index_of(const std::string& a) const { return idx(a); }

  bool leq(const std::string& a, const std::string& b) const {
    return closure_[idx(a)][idx(b)];
  }

  std::set<std::string> up_set(const std::string& a) const {
    return collect(idx(a), /*up=*/true);
  }

  std::set<std::string> down_set(const std::string& a) const {
    return collect(idx(a), /*up=*/false);
  }

  std::set<std::string> hourglass(const std::string& a) const {
    auto s = up_set(a);
    auto d = down_set(a);
    s.insert(d.begin(), d.end());
    return s;
  }

  std::set<std::string> order_interval(const std::string& a,
                                       const std::string& b) const {
    int ia = idx(a), ib = idx(b);
    if (!closure_[ia][ib]) {
      throw NotComparable("'" + a + "' is not below '" + b + "'");
    }
    std::set<std::string> out;
    for (int c = 0; c < size(); ++c) {
      if (closure_[ia][c] && closure_[c][ib]) out.insert(ids_[c]);
    }
    return out;
  }

  int up_height(const std::string& a) const { return up_h_[idx(a)]; }
  int down_height(const std::string& a) const { return down_h_[idx(a)]; }

  int centrality(const std::string& a) const {
    int i = idx(a);
    return up_h_[i] + down_h_[i] - 1;
  }

  int up_height_at(int i) const { return up_h_[i]; }
  int down_height_at(int i) const { return down_h_[i]; }

  /// Cover edges (child, parent), sorted.
  std::vector<Edge> cover_edges() const {
    std::vector<Edge> out;
    for (int a = 0; a < size(); ++a) {
      for (int b : up_covers_[a]) out.emplace_back(ids_[a], ids_[b]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::vector<int>& up_covers_at(int i) const { return up_covers_[i]; }
  const std::vector<int>& down_covers_at(int i) const { return down_covers_[i]; }

  ChainSet maximal_chains(std::uint64_t cap = 1000000) const {
    ChainSet cs;
    // Exact count by DP over covers, bottom to top.
    std::vector<std::uint64_t> paths(size(), 0);
    paths[top_] = 1;
    for (int a : by_up_height()) {
      if (a == top_) continue;
      for (int b : up_covers_[a]) paths[a] += paths[b];
    }
    cs.count = paths[bottom_];

    std::vector<std::string> current;
    enumerate_chains(bottom_, current, cs, cap);
    std::sort(cs.chains.begin(), cs.chains.end());
    return cs;
  }

  /// Elements lying on some maximum-length chain, in lexicographic order.
  std::vector<std::string> spindle_elements() const {
    std::vector<std::string> out;
    for (int a = 0; a < size(); ++a) {
      if (up_h_[a] + down_h_[a] - 1 == height_) out.push_back(ids_[a]);
    }
    return out;
  }

  bool is_graded() const {
    return static_cast<int>(spindle_elements().size()) == size();
  }

  /// Gradedness and the Jordan-Dedekind condition coincide on bounded posets.
  bool is_jordan_dedekind() const { return is_graded(); }

 private:
  std::vector<std::string> ids_;  // lexicographic
  std::map<std::string, int> index_;
  std::vector<bool> synthetic_;
  std::vector<std::vector<bool>> closure_;  // closure_[a][b] <=> a <= b
  std::vector<std::vector<int>> up_covers_, down_covers_;
  std::vector<int> up_h_, down_h_;
  int bottom_ = -1, top_ = -1, height_ = 0;

  int idx(const std::string& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) throw UnknownElement("unknown element '" + a + "'");
    return it->second;
  }

  static void detect_cycle(const std::vector<std::string>& ids,
                           const std::vector<std::set<int>>& up) {
    int n = static_cast<int>(ids.size());
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    for (int start = 0; start < n; ++start) {
      if (state[start] != 0) continue;
      std::vector<std::pair<int, std::set<int>::const_iterator>> stack;
      state[start] = 1;
      stack.emplace_back(start, up[start].begin());
      while (!stack.empty()) {
        auto& [v, it] = stack.back();
        if (it == up[v].end()) {
          state[v] = 2;
          stack.pop_back();
          continue;
        }
        int w = *it++;
        if (state[w] == 1) {
          // Reconstruct the cycle for the diagnostic.
          std::string names = ids[w];
          for (auto rit = stack.rbegin(); rit != stack.rend(); ++rit) {
            names += " < " + ids[rit->first];
            if (rit->first == w) break;
          }
          throw CycleDetected("cycle detected: " + names);
        }
        if (state[w] == 0) {
          state[w] = 1;
          stack.emplace_back(w, up[w].begin());
        }
      }
    }
  }

  void build_closure(const std::vector<std::set<int>>& up) {
    int n = size();
    closure_.assign(n, std::vector<bool>(n, false));
    // Memoized DFS: closure of a = {a} union closure of its parents.
    std::vector<bool> done(n, false);
    auto dfs = [&](auto&& self, int a) -> void {
      if (done[a]) return;
      done[a] = true;
      closure_[a][a] = true;
      for (int b : up[a]) {
        self(self, b);
        for (int c = 0; c < n; ++c) {
          if (closure_[b][c]) closure_[a][c] = true;
        }
      }
    };
    for (int a = 0; a < n; ++a) dfs(dfs, a);

    for (int a = 0; a < n; ++a) {
      bool is_bottom = true, is_top = true;
      for (int b = 0; b < n; ++b) {
        if (!closure_[a][b]) is_bottom = false;
        if (!closure_[b][a]) is_top = false;
      }
      if (is_bottom) bottom_ = a;
      if (is_top) top_ = a;
    }
  }

  void build_covers() {
    int n = size();
    up_covers_.assign(n, {});
    down_covers_.assign(n, {});
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b || !closure_[a][b]) continue;
        bool cover = true;
        for (int c = 0; c < n && cover; ++c) {
          if (c != a && c != b && closure_[a][c] && closure_[c][b]) cover = false;
        }
        if (cover) {
          up_covers_[a].push_back(b);
          down_covers_[b].push_back(a);
        }
      }
    }
  }

  /// Element indices sorted by increasing up-height (top first).
  std::vector<int> by_up_height() const {
    std::vector<int> order(size());
    for (int i = 0; i < size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return up_h_[a] < up_h_[b]; });
    return order;
  }

  void build_heights() {
    int n = size();
    up_h_.assign(n, 1);
    down_h_.assign(n, 1);
    // Longest path DP over covers, in topological order by closure depth.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int da = 0, db = 0;
      for (int c = 0; c < n; ++c) {
        if (closure_[a][c]) ++da;
        if (closure_[b][c]) ++db;
      }
      return da < db;  // fewer elements above == closer to top
    });
    for (int a : order) {  // top first: up heights
      for (int b : up_covers_[a]) up_h_[a] = std::max(up_h_[a], up_h_[b] + 1);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      for (int b : down_covers_[*it]) {
        down_h_[*it] = std::max(down_h_[*it], down_h_[b] + 1);
      }
    }
    height_ = up_h_[bottom_];
  }

  std::set<std::string> collect(int a, bool up) const {
    std::set<std::string> out;
    for (int b = 0; b < size(); ++b) {
      if (up ? closure_[a][b] : closure_[b][a]) out.insert(ids_[b]);
    }
    return out;
  }

  void enumerate_chains(int a, std::vector<std::string>& current, ChainSet& cs,
                        std::uint64_t cap) const {
    if (cs.truncated) return;
    current.push_back(ids_[a]);
    if (a == top_) {
      if (cs.chains.size() >= cap) {
        cs.truncated = true;
      } else {
        cs.chains.push_back(current);
      }
    } else {
      for (int b : up_covers_[a]) enumerate_chains(b, current, cs, cap);
    }
    current.pop_back();
  }
};

}  // namespace ivrank
