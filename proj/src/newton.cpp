#include "padic/newton.hpp"

#include <algorithm>

namespace padic {

NewtonPolygon polygon_from_points(std::vector<ExtVal> points) {
  if (points.empty()) throw std::invalid_argument("polygon: no points");
  if (!points[0].is_finite()) throw std::invalid_argument("polygon: point 0 must be finite");
  NewtonPolygon np;
  np.points = std::move(points);

  std::vector<std::pair<long, Rat>> finite;
  for (size_t i = 0; i < np.points.size(); ++i)
    if (np.points[i].is_finite()) finite.emplace_back(static_cast<long>(i), np.points[i].value());

  // Monotone chain, x already sorted; collinear middle points are dropped.
  auto not_convex = [](const std::pair<long, Rat>& a, const std::pair<long, Rat>& b,
                       const std::pair<long, Rat>& c) {
    return (b.second - a.second) * Rat(c.first - b.first) >=
           (c.second - b.second) * Rat(b.first - a.first);
  };
  std::vector<std::pair<long, Rat>>& hull = np.vertices;
  for (const auto& pt : finite) {
    while (hull.size() >= 2 && not_convex(hull[hull.size() - 2], hull.back(), pt))
      hull.pop_back();
    hull.push_back(pt);
  }

  for (size_t v = 0; v + 1 < hull.size(); ++v) {
    Rat slope = (hull[v + 1].second - hull[v].second) / Rat(hull[v + 1].first - hull[v].first);
    for (long k = hull[v].first; k < hull[v + 1].first; ++k) np.slopes.emplace_back(slope);
  }
  while (np.slopes.size() + 1 < np.points.size()) np.slopes.push_back(ExtVal::infinity());
  return np;
}

NewtonPolygon polygon_of_operator(const DiffOperator& op, const PointSpec& pt) {
  std::vector<ExtVal> points;
  points.reserve(static_cast<size_t>(op.order()) + 1);
  points.emplace_back(Rat(0));
  for (Index i = 1; i <= op.order(); ++i)
    points.push_back(gauss_val(op.coeff(i), pt) - Rat(Rat(i) * pt.omega_shift()));
  return polygon_from_points(std::move(points));
}

std::vector<ExtVal> hull_support_check(const std::vector<ExtVal>& points) {
  if (points.empty() || !points[0].is_finite())
    throw std::invalid_argument("hull_support_check: point 0 must be finite");
  std::vector<std::pair<long, Rat>> finite;
  for (size_t i = 0; i < points.size(); ++i)
    if (points[i].is_finite()) finite.emplace_back(static_cast<long>(i), points[i].value());
  const long last_finite = finite.back().first;

  // Candidate support slopes: all finite-pair differences (the sup of a
  // piecewise-linear concave function sits on a breakpoint).
  std::vector<Rat> candidates;
  for (size_t a = 0; a < finite.size(); ++a)
    for (size_t b = a + 1; b < finite.size(); ++b)
      candidates.push_back((finite[b].second - finite[a].second) /
                           Rat(finite[b].first - finite[a].first));
  if (candidates.empty()) candidates.emplace_back(0);

  std::vector<ExtVal> heights;
  heights.reserve(points.size());
  for (long x = 0; x < static_cast<long>(points.size()); ++x) {
    if (x > last_finite) {
      heights.push_back(ExtVal::infinity());
      continue;
    }
    bool have = false;
    Rat best;
    for (const Rat& s : candidates) {
      Rat inner = finite[0].second - s * Rat(finite[0].first);
      for (const auto& [j, vj] : finite) inner = std::min(inner, Rat(vj - s * Rat(j)));
      Rat val = s * Rat(x) + inner;
      if (!have || val > best) {
        best = val;
        have = true;
      }
    }
    heights.emplace_back(best);
  }
  return heights;
}

void SlopeMultiset::sort_canonical() {
  std::sort(entries.begin(), entries.end(), [](const SlopeEntry& a, const SlopeEntry& b) {
    if (a.kind != b.kind) return a.exact();
    return a.value < b.value;
  });
}

bool SlopeMultiset::all_exact() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const SlopeEntry& e) { return e.exact(); });
}

SlopeMultiset young_compare(const NewtonPolygon& np, const PointSpec& pt) {
  const Rat cutoff = pt.cutoff();
  SlopeMultiset out{pt, {}};
  out.entries.reserve(np.slopes.size());
  for (const ExtVal& s : np.slopes) {
    if (s.is_finite() && s.value() < cutoff)
      out.entries.push_back(SlopeEntry::make_exact(s.value()));
    else
      out.entries.push_back(SlopeEntry::at_least(cutoff));
  }
  out.sort_canonical();
  return out;
}

}  // namespace padic
