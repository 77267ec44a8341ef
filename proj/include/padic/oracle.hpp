#pragma once

#include "padic/diffmodule.hpp"

namespace padic {

// Brute-force growth estimate of the smallest log-radius, independent of
// the polygon/push-forward pipeline: with B_0 = I and B_{n+1} = B_n' + B_n G,
// a generic Taylor solution has n-th coefficient B_n / n!, so
//   lambda_1 = min(t, liminf_n (gauss_val(B_n) - vp(n!)) / n).
// The liminf is approached along n = p^k, hence the window minimum.
struct TaylorGrowth {
  PointSpec point;
  int terms = 0;
  std::vector<ExtVal> w;  // w_n = gauss_val(B_n) - vp_factorial(n), n = 0..terms
  int window_begin = 0;   // estimate minimizes w_n/n over [window_begin, terms]
  Rat estimate;           // capped at t

  // w_n / n for the window table; +infinity when B_n = 0.
  ExtVal ratio(int n) const;
};

TaylorGrowth estimate_lambda1(const DiffModule& m, const PointSpec& pt, int terms);

}  // namespace padic
