#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ivrank/errors.hpp"

namespace ivrank {

/// Closed integer interval [lo, hi] with lo <= hi.
///
/// Midpoints are kept as doubled integers (lo + hi) so equality tests stay
/// exact; rendering to "x.0"/"x.5" decimals happens only at the output layer.
/// Negative endpoints are allowed: difference intervals need them even though
/// rank intervals live in [0, h-1].
struct Interval {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline Interval make_interval(int lo, int hi) {
  if (lo > hi) {
    throw MalformedInterval("malformed interval [" + std::to_string(lo) + "," +
                            std::to_string(hi) + "]: lo > hi");
  }
  return Interval{lo, hi};
}

inline int width(Interval x) { return x.hi - x.lo; }

/// Returns lo + hi, i.e. twice the midpoint.
inline int midpoint_doubled(Interval x) { return x.lo + x.hi; }

/// Minkowski sum.
inline Interval add(Interval x, Interval y) {
  return Interval{x.lo + y.lo, x.hi + y.hi};
}

inline Interval subtract(Interval x, Interval y) {
  return Interval{x.lo - y.hi, x.hi - y.lo};
}

/// Setwise absolute value: lower bound is 0 exactly when the interval
/// contains 0.
inline Interval abs_interval(Interval x) {
  const int lo = (x.lo <= 0 && 0 <= x.hi) ? 0 : std::min(std::abs(x.lo), std::abs(x.hi));
  const int hi = std::max(std::abs(x.lo), std::abs(x.hi));
  return Interval{lo, hi};
}

/// Separation |x - y|: the interval of absolute differences between points of
/// the two intervals. Symmetric in its arguments.
inline Interval separation(Interval x, Interval y) {
  return abs_interval(subtract(x, y));
}

/// Strong interval order: x.hi < y.lo, or x = y (reflexive closure).
inline bool leq_strong(Interval x, Interval y) {
  return x.hi < y.lo || x == y;
}

/// Weak interval order: componentwise endpoint order.
inline bool leq_weak(Interval x, Interval y) {
  return x.lo <= y.lo && x.hi <= y.hi;
}

/// Containment order.
inline bool subset_of(Interval x, Interval y) {
  return x.lo >= y.lo && x.hi <= y.hi;
}

/// The seven pairwise relation categories: equality, the strong order and its
/// dual, containment and its dual, and proper intersection from either side.
enum class Relation {
  Equal,
  StrongLt,
  StrongGt,
  Subset,
  Superset,
  ProperLeft,
  ProperRight,
};

/// Assigns exactly one Relation to an ordered pair. Ties are broken with
/// precedence equality > strong > containment > proper intersection, which
/// keeps containment for pairs like [1,1] vs [1,2] that share an endpoint.
inline Relation classify(Interval x, Interval y) {
  if (x == y) return Relation::Equal;
  if (x.hi < y.lo) return Relation::StrongLt;
  if (y.hi < x.lo) return Relation::StrongGt;
  if (subset_of(x, y)) return Relation::Subset;
  if (subset_of(y, x)) return Relation::Superset;
  return leq_weak(x, y) ? Relation::ProperLeft : Relation::ProperRight;
}

inline const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Equal: return "equal";
    case Relation::StrongLt: return "strong_lt";
    case Relation::StrongGt: return "strong_gt";
    case Relation::Subset: return "subset";
    case Relation::Superset: return "superset";
    case Relation::ProperLeft: return "proper_left";
    case Relation::ProperRight: return "proper_right";
  }
  return "?";
}

inline const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::Equal: return "=";
    case Relation::StrongLt: return "<_S";
    case Relation::StrongGt: return ">_S";
    case Relation::Subset: return "sub";
    case Relation::Superset: return "sup";
    case Relation::ProperLeft: return "o<=";
    case Relation::ProperRight: return "o>=";
  }
  return "?";
}

inline std::string to_string(Interval x) {
  return "[" + std::to_string(x.lo) + "," + std::to_string(x.hi) + "]";
}

/// Renders a doubled midpoint as an exact decimal, e.g. 3 -> "1.5", 4 -> "2.0".
inline std::string midpoint_decimal(int doubled) {
  const bool neg = doubled < 0;
  const int a = std::abs(doubled);
  std::string s = std::to_string(a / 2) + (a % 2 != 0 ? ".5" : ".0");
  return neg ? "-" + s : s;
}

}  // namespace ivrank
