// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen from the worked tables and from
// brute-force oracles computed setwise / by explicit enumeration.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ivrank/cli.hpp"
#include "ivrank/compare.hpp"
#include "ivrank/io.hpp"
#include "ivrank/rank.hpp"
#include "oracles.hpp"

using namespace ivrank;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& text) { g_notes.push_back(text); }

struct Criterion {
  std::string name;
  double limit_seconds;
  bool ok = true;

  void run(void (*body)()) {
    g_notes.clear();
    auto start = std::chrono::steady_clock::now();
    try {
      body();
      ok = g_notes.empty();
    } catch (const std::exception& e) {
      note(std::string("exception: ") + e.what());
      ok = false;
    }
    auto elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (elapsed >= limit_seconds) {
      ok = false;
      note("time limit exceeded");
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " ("
              << elapsed << "s)\n";
    for (const auto& n : g_notes) std::cout << "       " << n << "\n";
    if (!ok) ++g_failures;
  }
};

void EXPECT(bool cond, const std::string& message) {
  if (!cond) note(message);
}

// --- criterion 1: the running example rank table ------------------------------------------

void criterion1() {
  Poset p = fixtures::running_example();
  RankTable rt = standard_interval_rank(p);
  EXPECT(rt.height == 5, "height != 5");
  EXPECT(rt.rows.size() == 9, "expected 9 rows");

  struct Row {
    const char* id;
    int up_h, down_h, r_top, r_bottom, width, centrality, mid2, freese;
  };
  const Row table[] = {
      {"⊤", 1, 5, 0, 0, 0, 5, 0, 9}, {"K", 2, 4, 1, 1, 0, 5, 2, 7},
      {"C", 2, 3, 1, 2, 1, 4, 3, 6}, {"B", 2, 2, 1, 3, 2, 3, 4, 5},
      {"H", 3, 3, 2, 2, 0, 5, 4, 5}, {"J", 3, 2, 2, 3, 1, 4, 5, 4},
      {"E", 3, 2, 2, 3, 1, 4, 5, 4}, {"A", 4, 2, 3, 3, 0, 5, 6, 3},
      {"⊥", 5, 1, 4, 4, 0, 5, 8, 1},
  };
  for (const auto& e : table) {
    const RankRow& r = rt.row(e.id);
    bool same = r.up_height == e.up_h && r.down_height == e.down_h &&
                r.r_top == e.r_top && r.r_bottom == e.r_bottom &&
                r.width == e.width && r.centrality == e.centrality &&
                r.midpoint_doubled == e.mid2 && r.freese == e.freese;
    EXPECT(same, std::string("row mismatch at element ") + e.id);
  }
}

// --- criterion 2: the running example comparison matrix -----------------------------------

void criterion2() {
  Poset p = fixtures::running_example();
  RankTable rt = standard_interval_rank(p);
  auto matrix = comparison_matrix(p, rt, PairScope::All);
  EXPECT(matrix.size() == 36, "expected 36 records");

  // Interval classes in table order; J and E share the [2,3] class.
  std::map<std::string, int> cls = {{"⊤", 0}, {"K", 1}, {"C", 2}, {"B", 3},
                                    {"H", 4}, {"E", 5}, {"J", 5}, {"A", 6},
                                    {"⊥", 7}};
  struct Cell {
    Relation rel;
    Interval sep;
    int w;
  };
  std::map<std::pair<int, int>, Cell> expected = {
      {{0, 1}, {Relation::StrongLt, {1, 1}, 0}},
      {{0, 2}, {Relation::StrongLt, {1, 2}, 1}},
      {{0, 3}, {Relation::StrongLt, {1, 3}, 2}},
      {{0, 4}, {Relation::StrongLt, {2, 2}, 0}},
      {{0, 5}, {Relation::StrongLt, {2, 3}, 1}},
      {{0, 6}, {Relation::StrongLt, {3, 3}, 0}},
      {{0, 7}, {Relation::StrongLt, {4, 4}, 0}},
      {{1, 2}, {Relation::Subset, {0, 1}, 1}},
      {{1, 3}, {Relation::Subset, {0, 2}, 2}},
      {{1, 4}, {Relation::StrongLt, {1, 1}, 0}},
      {{1, 5}, {Relation::StrongLt, {1, 2}, 1}},
      {{1, 6}, {Relation::StrongLt, {2, 2}, 0}},
      {{1, 7}, {Relation::StrongLt, {3, 3}, 0}},
      {{2, 3}, {Relation::Subset, {0, 2}, 2}},
      {{2, 4}, {Relation::Superset, {0, 1}, 1}},
      {{2, 5}, {Relation::ProperLeft, {0, 2}, 2}},
      {{2, 6}, {Relation::StrongLt, {1, 2}, 1}},
      {{2, 7}, {Relation::StrongLt, {2, 3}, 1}},
      {{3, 4}, {Relation::Superset, {0, 1}, 1}},
      {{3, 5}, {Relation::Superset, {0, 2}, 2}},
      {{3, 6}, {Relation::Superset, {0, 2}, 2}},
      {{3, 7}, {Relation::StrongLt, {1, 3}, 2}},
      {{4, 5}, {Relation::Subset, {0, 1}, 1}},
      {{4, 6}, {Relation::StrongLt, {1, 1}, 0}},
      {{4, 7}, {Relation::StrongLt, {2, 2}, 0}},
      // equal but nondegenerate ranks separate setwise: |[2,3]-[2,3]| = [0,1]
      {{5, 5}, {Relation::Equal, {0, 1}, 1}},
      {{5, 6}, {Relation::Superset, {0, 1}, 1}},
      {{5, 7}, {Relation::StrongLt, {1, 2}, 1}},
      // The printed table's (A, bottom) cell disagrees with the separation
      // definition; the spindle-edge value [1,1], width 0 is asserted.
      {{6, 7}, {Relation::StrongLt, {1, 1}, 0}},
  };

  int checked = 0;
  for (const auto& rec : matrix) {
    auto key = std::make_pair(cls.at(rec.a), cls.at(rec.b));
    auto it = expected.find(key);
    if (it == expected.end()) {
      note("unexpected pair orientation " + rec.a + "," + rec.b);
      continue;
    }
    const Cell& cell = it->second;
    bool same = rec.relation == cell.rel && rec.sep == cell.sep &&
                rec.sep_width == cell.w;
    EXPECT(same, "cell mismatch at pair " + rec.a + "," + rec.b);
    ++checked;
  }
  EXPECT(checked == 36, "not all 36 cells were checked");
}

// --- criterion 3: N5 enumeration ------------------------------------------

void criterion3() {
  Poset n5 = fixtures::n5();
  RankTable rt = standard_interval_rank(n5);
  auto functions = enumerate_strict_rank_functions(n5, OrderTag::WeakDual);
  EXPECT(functions.size() == 3, "expected exactly 3 assignments");

  std::set<std::pair<int, int>> b_values;
  for (const auto& ra : functions) {
    EXPECT(ra.intervals.at("⊤") == Interval{0, 0}, "top not [0,0]");
    EXPECT(ra.intervals.at("A") == Interval{1, 1}, "A not [1,1]");
    EXPECT(ra.intervals.at("C") == Interval{2, 2}, "C not [2,2]");
    EXPECT(ra.intervals.at("⊥") == Interval{3, 3}, "bottom not [3,3]");
    Interval b = ra.intervals.at("B");
    b_values.emplace(b.lo, b.hi);
    for (const auto& r : rt.rows) {
      EXPECT(subset_of(ra.intervals.at(r.id), r.rank()),
             "assignment not contained in the standard rank at " + r.id);
    }
  }
  EXPECT((b_values ==
          std::set<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}),
         "B values are not {[1,1],[2,2],[1,2]}");
}

// --- criterion 4: property suite on random DAGs ---------------------------

void criterion4() {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    Poset p = fixtures::random_bounded_poset(rng, 28, 0.18);
    RankTable rt = standard_interval_rank(p);
    int h = rt.height;
    std::vector<std::string> spindle = p.spindle_elements();
    std::set<std::string> spindle_set(spindle.begin(), spindle.end());
    if (p.size() <= 12) {
      if (spindle_set != oracles::spindle_by_enumeration(p)) {
        note("spindle disagrees with chain enumeration, trial " +
             std::to_string(trial));
        return;
      }
    }

    RankAssignment proc = procedural_interval_rank(p);
    for (const auto& r : rt.rows) {
      bool ok = r.width + r.centrality == h && r.width >= 0 &&
                r.width <= std::max(0, h - 3) &&
                (r.width == 0) == (spindle_set.count(r.id) > 0) &&
                r.r_top + r.r_bottom + r.freese == 2 * h - 1 &&
                r.proc_top == r.r_top && proc.intervals.at(r.id) == r.rank();
      if (h >= 4) {
        bool pinch = p.up_height(r.id) == 2 && p.down_height(r.id) == 2;
        ok = ok && ((r.width == h - 3) == pinch);
      }
      if (!ok) {
        note("rank invariant violated at " + r.id + ", trial " +
             std::to_string(trial));
        return;
      }
    }
    for (const auto& a : rt.rows) {
      for (const auto& b : rt.rows) {
        if (a.id == b.id || !p.leq(a.id, b.id)) continue;
        if (!(a.r_top > b.r_top && a.r_bottom > b.r_bottom)) {
          note("strict antitonicity violated at " + a.id + " < " + b.id);
          return;
        }
      }
    }
  }
}

// --- criterion 5: gradedness ----------------------------------------------

void criterion5() {
  EXPECT(fixtures::b3().is_graded(), "B3 not graded");
  for (int n : {2, 3, 5, 8}) {
    EXPECT(Poset::from_edges(fixtures::chain_edges(n)).is_graded(),
           "chain poset not graded");
  }
  EXPECT(!fixtures::n5().is_graded(), "N5 reported graded");
  EXPECT(!fixtures::running_example().is_graded(), "running example reported graded");
  EXPECT(!classical_rank(fixtures::n5()).has_value(),
         "classical rank exists on N5");

  for (Poset p : {fixtures::b3(), Poset::from_edges(fixtures::chain_edges(6))}) {
    auto rho = classical_rank(p);
    if (!rho) {
      note("classical rank missing on a graded poset");
      return;
    }
    EXPECT((*rho)[p.index_of(p.top())] == 0, "rho(top) != 0");
    for (const auto& [child, parent] : p.cover_edges()) {
      EXPECT((*rho)[p.index_of(child)] == (*rho)[p.index_of(parent)] + 1,
             "cover decrement violated at " + child + " < " + parent);
    }
  }
}

// --- criterion 6: interval algebra oracle ---------------------------------

void criterion6() {
  std::vector<Interval> intervals;
  for (int lo = -5; lo <= 5; ++lo) {
    for (int hi = lo; hi <= 5; ++hi) intervals.push_back(Interval{lo, hi});
  }
  for (Interval x : intervals) {
    if (abs_interval(x) != oracles::setwise_abs(x)) {
      note("abs mismatch at " + to_string(x));
      return;
    }
    for (Interval y : intervals) {
      bool ok = add(x, y) == oracles::setwise_add(x, y) &&
                subtract(x, y) == oracles::setwise_subtract(x, y) &&
                separation(x, y) == oracles::setwise_separation(x, y);
      if (!ok) {
        note("arithmetic mismatch at " + to_string(x) + ", " + to_string(y));
        return;
      }
      if (leq_strong(x, y) && !leq_weak(x, y)) {
        note("strong does not imply weak at " + to_string(x));
        return;
      }
      std::set<int> endpoints = {x.lo, x.hi, y.lo, y.hi};
      if (endpoints.size() == 4) {
        Relation r = classify(x, y);
        Relation want;
        if (x.hi < y.lo) want = Relation::StrongLt;
        else if (y.hi < x.lo) want = Relation::StrongGt;
        else if (x.lo > y.lo && x.hi < y.hi) want = Relation::Subset;
        else if (y.lo > x.lo && y.hi < x.hi) want = Relation::Superset;
        else if (x.lo < y.lo) want = Relation::ProperLeft;
        else want = Relation::ProperRight;
        if (r != want) {
          note("classification mismatch at " + to_string(x) + ", " +
               to_string(y));
          return;
        }
      }
    }
  }
}

// --- criterion 7: subset maximality sweep ---------------------------------

void criterion7() {
  std::mt19937 rng(424242);
  int instances = 0;
  while (instances < 500) {
    Poset p = fixtures::random_bounded_poset(rng, 5, 0.35);
    if (p.size() > 7) continue;
    ++instances;
    RankTable rt = standard_interval_rank(p);
    auto functions = enumerate_strict_rank_functions(p, OrderTag::WeakDual);
    if (functions.empty()) {
      note("no strict weak-dual rank function found on instance " +
           std::to_string(instances));
      return;
    }
    for (const auto& ra : functions) {
      for (const auto& r : rt.rows) {
        if (!subset_of(ra.intervals.at(r.id), r.rank())) {
          note("containment violated at " + r.id + ", instance " +
               std::to_string(instances));
          return;
        }
      }
    }
  }
}

// --- criterion 8: formats --------------------------------------------------

void criterion8() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ivrank_acceptance";
  fs::create_directories(dir);
  auto write_file = [&](const std::string& name, const std::string& content) {
    std::ofstream out(dir / name, std::ios::binary);
    out << content;
    return (dir / name).string();
  };

  // the running example CSV is byte-stable across runs
  std::string edges;
  for (const auto& [child, parent] : fixtures::running_example_edges()) {
    edges += child + "\t" + parent + "\n";
  }
  std::string input = write_file("running_example.tsv", edges);
  auto invoke = [&](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  };
  auto [code1, out1, err1] = invoke({"rank", "--input", input, "--output", "csv"});
  auto [code2, out2, err2] = invoke({"rank", "--input", input, "--output", "csv"});
  EXPECT(code1 == 0 && code2 == 0, "rank command failed");
  EXPECT(out1 == out2, "rank CSV not byte-stable");
  EXPECT(out1.find("C,2,3,1,2,1,4,1.5,6") != std::string::npos,
         "expected CSV row missing");

  // OBO fixture of 5 stanzas
  std::string obo_text =
      "format-version: 1.2\n"
      "[Term]\n"
      "id: GO:1\n"
      "name: root\n"
      "[Term]\n"
      "id: GO:2\n"
      "is_a: GO:1 ! root\n"
      "[Term]\n"
      "id: GO:3\n"
      "is_a: GO:1\n"
      "[Term]\n"
      "id: GO:4\n"
      "is_a: GO:2\n"
      "is_a: GO:3\n"
      "[Term]\n"
      "id: GO:5\n"
      "is_obsolete: true\n"
      "is_a: GO:4\n";
  EdgeDocument doc = parse_obo(obo_text);
  std::vector<Edge> want = {
      {"GO:2", "GO:1"}, {"GO:3", "GO:1"}, {"GO:4", "GO:2"}, {"GO:4", "GO:3"}};
  EXPECT(doc.edges == want, "OBO fixture parsed to an unexpected edge set");

  // cyclic edge file exits 1 and names the cycle
  std::string cyclic = write_file("cycle.tsv", "p\tq\nq\tr\nr\tp\n");
  auto [code3, out3, err3] = invoke({"rank", "--input", cyclic});
  EXPECT(code3 == 1, "cyclic input did not exit with code 1");
  EXPECT(err3.find("cycle") != std::string::npos &&
             err3.find("p") != std::string::npos &&
             err3.find("q") != std::string::npos &&
             err3.find("r") != std::string::npos,
         "cycle diagnostic does not name the cycle");
}

}  // namespace

int main() {
  Criterion{"criterion 1: running-example rank table", 1.0}.run(criterion1);
  Criterion{"criterion 2: running-example comparison matrix", 1.0}.run(criterion2);
  Criterion{"criterion 3: N5 strict rank enumeration", 1.0}.run(criterion3);
  Criterion{"criterion 4: rank invariants on random DAGs", 30.0}.run(criterion4);
  Criterion{"criterion 5: gradedness and classical rank", 5.0}.run(criterion5);
  Criterion{"criterion 6: interval algebra vs setwise oracle", 10.0}.run(criterion6);
  Criterion{"criterion 7: subset maximality sweep", 60.0}.run(criterion7);
  Criterion{"criterion 8: output formats and diagnostics", 5.0}.run(criterion8);

  if (g_failures != 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
