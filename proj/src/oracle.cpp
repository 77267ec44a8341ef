#include "padic/oracle.hpp"

namespace padic {

ExtVal TaylorGrowth::ratio(int n) const {
  const ExtVal& wn = w.at(static_cast<size_t>(n));
  if (!wn.is_finite() || n == 0) return ExtVal::infinity();
  return ExtVal(Rat(wn.value() / n));
}

TaylorGrowth estimate_lambda1(const DiffModule& m, const PointSpec& pt, int terms) {
  if (terms < 8) throw std::invalid_argument("estimate_lambda1: need at least 8 terms");
  TaylorGrowth out{pt, terms, {}, terms / 2, Rat(0)};
  out.w.reserve(static_cast<size_t>(terms) + 1);

  MatrixRF b = MatrixRF::Identity(m.rank(), m.rank());
  out.w.emplace_back(Rat(0));
  for (int n = 1; n <= terms; ++n) {
    b = derivative(b) + b * m.G;
    out.w.push_back(gauss_val(b, pt) -
                    Rat(static_cast<long>(vp_factorial(static_cast<unsigned long>(n), pt.p))));
  }

  ExtVal best = ExtVal::infinity();
  for (int n = out.window_begin; n <= terms; ++n) best = min(best, out.ratio(n));
  out.estimate = best.is_finite() ? std::min(pt.t, best.value()) : pt.t;
  return out;
}

}  // namespace padic
