#pragma once

#include <vector>

#include "padic/diffmodule.hpp"

namespace padic {

// Lower Newton polygon of the points (i, V_i), exact throughout.  Missing
// coefficients contribute no constraint: when everything past index k is
// infinite, slopes k+1..r are +infinity, which downstream only ever censors
// (never fabricates) a radius.
struct NewtonPolygon {
  std::vector<ExtVal> points;                 // V_0 .. V_r
  std::vector<std::pair<long, Rat>> vertices; // lower-hull vertices (finite)
  std::vector<ExtVal> slopes;                 // r slopes, nondecreasing

  Index order() const { return static_cast<Index>(points.size()) - 1; }
};

// Hull of raw points; points[0] must be finite.
NewtonPolygon polygon_from_points(std::vector<ExtVal> points);

// V_0 = 0, V_i = gauss_val(g_i) - i/(p-1): the omega-twisted coefficient
// valuations whose small hull slopes are the small log-radii.
NewtonPolygon polygon_of_operator(const DiffOperator& op, const PointSpec& pt);

// Partial heights by the support-function formula
//   h_i = sup_s ( s*i + min_j (V_j - s*j) ),
// an independent check of the hull (+infinity past the last finite point).
std::vector<ExtVal> hull_support_check(const std::vector<ExtVal>& points);

// One radius constraint: pinned exactly, or only bounded below.
struct SlopeEntry {
  enum class Kind { Exact, AtLeast };
  Kind kind;
  Rat value;  // the log-radius, or the lower bound

  bool exact() const { return kind == Kind::Exact; }
  static SlopeEntry make_exact(Rat v) { return {Kind::Exact, std::move(v)}; }
  static SlopeEntry at_least(Rat v) { return {Kind::AtLeast, std::move(v)}; }
  friend bool operator==(const SlopeEntry& a, const SlopeEntry& b) {
    return a.kind == b.kind && a.value == b.value;
  }
};

// Multiset of per-index radius constraints at a point, kept sorted
// (exact values ascending, then bounds ascending).
struct SlopeMultiset {
  PointSpec point;
  std::vector<SlopeEntry> entries;

  void sort_canonical();
  bool all_exact() const;
  friend bool operator==(const SlopeMultiset& a, const SlopeMultiset& b) {
    return a.point == b.point && a.entries == b.entries;
  }
};

// Young's comparison: polygon slopes strictly below C = t - 1/(p-1) are the
// log-radii exactly; at or above C (including +infinity) nothing more than
// ">= C" is knowable from the polygon.
SlopeMultiset young_compare(const NewtonPolygon& np, const PointSpec& pt);

}  // namespace padic
