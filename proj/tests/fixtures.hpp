#pragma once

#include <random>
#include <string>
#include <vector>

#include "ivrank/poset.hpp"

namespace fixtures {

// Running example: bounded poset with height 5, 6 maximal chains, and
// spindle bot < A < H < K < top.
inline std::vector<ivrank::Edge> running_example_edges() {
  return {
      {"⊥", "A"}, {"⊥", "B"}, {"⊥", "E"}, {"⊥", "J"},
      {"A", "H"}, {"H", "K"}, {"J", "C"}, {"J", "K"},
      {"E", "C"}, {"E", "K"}, {"B", "⊤"}, {"C", "⊤"},
      {"K", "⊤"},
  };
}

inline std::vector<ivrank::Edge> n5_edges() {
  return {{"⊥", "C"}, {"C", "A"}, {"A", "⊤"}, {"⊥", "B"}, {"B", "⊤"}};
}

// Boolean lattice B3: subsets of {a,b,c} ordered by inclusion.
inline std::vector<ivrank::Edge> b3_edges() {
  // index = bitmask with bit 0 = a, bit 1 = b, bit 2 = c
  std::vector<std::string> names = {"{}", "a", "b", "ab", "c", "ac", "bc", "abc"};
  auto bits = [](int mask) { return mask; };
  std::vector<ivrank::Edge> edges;
  for (int lo = 0; lo < 8; ++lo) {
    for (int hi = 0; hi < 8; ++hi) {
      int diff = bits(hi) & ~bits(lo);
      if ((bits(lo) & ~bits(hi)) == 0 && diff != 0 && (diff & (diff - 1)) == 0) {
        edges.emplace_back(names[lo], names[hi]);
      }
    }
  }
  return edges;
}

inline std::vector<ivrank::Edge> chain_edges(int n) {
  std::vector<ivrank::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
  }
  return edges;
}

inline ivrank::Poset running_example() { return ivrank::Poset::from_edges(running_example_edges()); }
inline ivrank::Poset n5() { return ivrank::Poset::from_edges(n5_edges()); }
inline ivrank::Poset b3() { return ivrank::Poset::from_edges(b3_edges()); }

// Random DAG on `nodes` inner elements: edges only i -> j with i < j, so the
// relation is acyclic by construction. Bounds are attached by the builder.
inline std::vector<ivrank::Edge> random_dag_edges(std::mt19937& rng, int nodes,
                                                  double edge_prob) {
  std::vector<ivrank::Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto name = [](int i) { return "n" + std::to_string(i); };
  for (int i = 0; i < nodes; ++i) {
    for (int j = i + 1; j < nodes; ++j) {
      if (coin(rng) < edge_prob) edges.emplace_back(name(i), name(j));
    }
  }
  if (edges.empty()) edges.emplace_back(name(0), name(1));
  return edges;
}

inline ivrank::Poset random_bounded_poset(std::mt19937& rng, int max_nodes,
                                          double edge_prob) {
  std::uniform_int_distribution<int> size_dist(2, max_nodes);
  return ivrank::Poset::from_edges(
      random_dag_edges(rng, size_dist(rng), edge_prob));
}

}  // namespace fixtures
