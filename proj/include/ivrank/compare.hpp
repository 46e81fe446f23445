#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ivrank/interval.hpp"
#include "ivrank/poset.hpp"
#include "ivrank/rank.hpp"

namespace ivrank {

/// Quantitative comparison of two standard rank intervals: the relation
/// category, the difference interval alpha = R(b) - R(a), its absolute value
/// (the separation), and the separation width.
struct ComparisonRecord {
  std::string a, b;
  Relation relation = Relation::Equal;
  Interval alpha;
  Interval sep;
  int sep_width = 0;
  bool same_rank_group = false;  // distinct elements with identical intervals
};

enum class PairScope { All, Covers };

inline ComparisonRecord compare_pair(const RankTable& rt, const std::string& a,
                                     const std::string& b) {
  Interval ra = rt.row(a).rank();
  Interval rb = rt.row(b).rank();
  ComparisonRecord rec;
  rec.a = a;
  rec.b = b;
  rec.relation = classify(ra, rb);
  rec.alpha = subtract(rb, ra);
  rec.sep = abs_interval(rec.alpha);
  rec.sep_width = width(rec.sep);
  rec.same_rank_group = a != b && ra == rb;
  return rec;
}

/// All: one record per unordered pair, oriented with the (r_top, r_bottom, id)
/// smaller element first, matching the upper triangle of the comparison table.
/// Covers: one record per cover edge a cover b, compared descending as (b, a).
inline std::vector<ComparisonRecord> comparison_matrix(const Poset& p,
                                                       const RankTable& rt,
                                                       PairScope scope) {
  std::vector<ComparisonRecord> out;
  if (scope == PairScope::All) {
    std::vector<const RankRow*> rows;
    for (const auto& r : rt.rows) rows.push_back(&r);
    std::sort(rows.begin(), rows.end(), [](const RankRow* x, const RankRow* y) {
      if (x->r_top != y->r_top) return x->r_top < y->r_top;
      if (x->r_bottom != y->r_bottom) return x->r_bottom < y->r_bottom;
      return x->id < y->id;
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        out.push_back(compare_pair(rt, rows[i]->id, rows[j]->id));
      }
    }
  } else {
    for (const auto& [child, parent] : p.cover_edges()) {
      out.push_back(compare_pair(rt, parent, child));
    }
    std::sort(out.begin(), out.end(),
              [](const ComparisonRecord& x, const ComparisonRecord& y) {
                if (x.a != y.a) return x.a < y.a;
                return x.b < y.b;
              });
  }
  return out;
}

}  // namespace ivrank
