#include <doctest.h>

#include "padic/oracle.hpp"

using namespace padic;

namespace {
DiffModule scalar_module(RatFunc g) {
  MatrixRF m(1, 1);
  m << std::move(g);
  return DiffModule(std::move(m));
}
}  // namespace

TEST_CASE("rank-1 constant module: exponential growth") {
  // G = (1): B_n = 1, w_n = -v_2(n!); the window minimum sits at n = 2^k
  // and converges to -1 with error at most 1/(window start)
  TaylorGrowth g = estimate_lambda1(scalar_module(RatFunc(1)), PointSpec(2, Rat(0)), 32);
  CHECK(g.estimate == make_rat(-31, 32));
  Rat err = g.estimate - Rat(-1);
  if (err < 0) err = -err;
  CHECK(err <= make_rat(1, g.window_begin));
  CHECK(g.w[0] == ExtVal(Rat(0)));
  for (int n = 1; n <= 32; ++n)
    CHECK(g.w[static_cast<size_t>(n)] ==
          ExtVal(Rat(-static_cast<long>(vp_factorial(static_cast<unsigned long>(n), 2)))));
}

TEST_CASE("trivial module caps at t") {
  TaylorGrowth g = estimate_lambda1(DiffModule(MatrixRF::Zero(2, 2)), PointSpec(2, Rat(0)), 16);
  CHECK(g.estimate == Rat(0));
  for (int n = 1; n <= 16; ++n) CHECK(!g.w[static_cast<size_t>(n)].is_finite());

  TaylorGrowth g3 = estimate_lambda1(DiffModule(MatrixRF::Zero(1, 1)),
                                     PointSpec(3, make_rat(5, 2)), 16);
  CHECK(g3.estimate == make_rat(5, 2));
}

TEST_CASE("deep visible radius: G = (1/8) at p = 2") {
  TaylorGrowth g =
      estimate_lambda1(scalar_module(RatFunc(make_rat(1, 8))), PointSpec(2, Rat(0)), 60);
  // exact value is -4; the window minimum is within 1/10
  Rat err = g.estimate - Rat(-4);
  if (err < 0) err = -err;
  CHECK(err <= make_rat(1, 10));
}

TEST_CASE("rank-1 window values follow vp(a) - vp(n!)/n exactly") {
  for (long p : {2L, 3L}) {
    const long m = 2;
    Rat a = make_rat(1, p * p);  // vp(a) = -2
    TaylorGrowth g = estimate_lambda1(scalar_module(RatFunc(a)), PointSpec(p, Rat(0)), 40);
    for (int n = 1; n <= 40; ++n) {
      Rat expected = Rat(-m * n) -
                     Rat(static_cast<long>(vp_factorial(static_cast<unsigned long>(n), p)));
      CHECK(g.w[static_cast<size_t>(n)] == ExtVal(expected));
    }
  }
}

TEST_CASE("direct sums grow block-diagonally") {
  MatrixRF g(2, 2);
  g << RatFunc(make_rat(1, 4)), RatFunc(0), RatFunc(0), RatFunc(2);
  // min over blocks: the 1/4 block dominates (vp = -2)
  TaylorGrowth sum = estimate_lambda1(DiffModule(g), PointSpec(2, Rat(0)), 60);
  TaylorGrowth solo =
      estimate_lambda1(scalar_module(RatFunc(make_rat(1, 4))), PointSpec(2, Rat(0)), 60);
  CHECK(sum.estimate == solo.estimate);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(estimate_lambda1(DiffModule(MatrixRF::Zero(1, 1)), PointSpec(2, Rat(0)), 4),
                  std::invalid_argument);
}

TEST_CASE("non-constant connection: d - 1/T has a polynomial horizontal section") {
  // y' = y/T is solved by y = T: the module is solvable at t = 0, and the
  // growth estimate must respect the cap min(t, ...).
  TaylorGrowth g = estimate_lambda1(
      scalar_module(RatFunc(Poly(1), Poly::variable())), PointSpec(2, Rat(0)), 24);
  CHECK(g.estimate <= Rat(0));
  CHECK(g.estimate >= Rat(-1));
}
