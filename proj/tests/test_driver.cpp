#include <doctest.h>

#include <random>

#include "padic/driver.hpp"
#include "padic/oracle.hpp"

using namespace padic;

namespace {
DiffModule scalar_module(RatFunc g) {
  MatrixRF m(1, 1);
  m << std::move(g);
  return DiffModule(std::move(m));
}

DiffOperator first_order(RatFunc g1) {
  DiffOperator op;
  op.g = {std::move(g1)};
  return op;
}
}  // namespace

TEST_CASE("d - 1 at p=2, t=0: censored at stage 0, pinned at stage 1") {
  RadiusReport report =
      compute_radii(companion_module(first_order(RatFunc(-1))), PointSpec(2, Rat(0)), 3);
  REQUIRE(report.verdicts.size() == 1);
  CHECK(report.verdicts[0].exact);
  CHECK(report.verdicts[0].value == Rat(-1));
  CHECK(report.verdicts[0].stage_found == 1);
  CHECK(report.stages_used == 1);
  REQUIRE(report.stages.size() == 2);
  CHECK(report.stages[0].inverted.entries[0] == SlopeEntry::at_least(Rat(-1)));
  CHECK(report.stages[1].module_rank == 2);
}

TEST_CASE("visible radius resolves at stage 0") {
  RadiusReport report =
      compute_radii(scalar_module(RatFunc(make_rat(1, 8))), PointSpec(2, Rat(0)), 3);
  REQUIRE(report.verdicts.size() == 1);
  CHECK(report.verdicts[0].exact);
  CHECK(report.verdicts[0].value == Rat(-4));
  CHECK(report.verdicts[0].stage_found == 0);
  CHECK(report.stages_used == 0);
}

TEST_CASE("trivial module: bounds improve geometrically, never resolve") {
  RadiusReport report = compute_radii(DiffModule(MatrixRF::Zero(1, 1)), PointSpec(2, Rat(0)), 3);
  REQUIRE(report.verdicts.size() == 1);
  CHECK(!report.verdicts[0].exact);
  CHECK(report.verdicts[0].value == make_rat(-1, 8));
  CHECK(report.stages_used == 3);
  REQUIRE(report.stages.size() == 4);
  const Rat expected[] = {Rat(-1), make_rat(-1, 2), make_rat(-1, 4), make_rat(-1, 8)};
  for (int k = 0; k <= 3; ++k) {
    const SlopeMultiset& folded = report.stages[static_cast<size_t>(k)].inverted;
    REQUIRE(folded.entries.size() == 1);
    CHECK(folded.entries[0] == SlopeEntry::at_least(expected[k]));
  }
}

TEST_CASE("stage_analyze hand cases") {
  // companion of d - 1/8 at p=2, t=0
  SlopeMultiset s =
      stage_analyze(companion_module(first_order(RatFunc(make_rat(-1, 8)))), PointSpec(2, Rat(0)));
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0] == SlopeEntry::make_exact(Rat(-4)));

  // trivial rank 1
  SlopeMultiset triv = stage_analyze(DiffModule(MatrixRF::Zero(1, 1)), PointSpec(2, Rat(0)));
  CHECK(triv.entries[0] == SlopeEntry::at_least(Rat(-1)));
}

TEST_CASE("monotone refinement across stages") {
  // rank 2: one visible radius, one solvable
  MatrixRF g = MatrixRF::Zero(2, 2);
  g(0, 0) = RatFunc(make_rat(1, 4));
  RadiusReport report = compute_radii(DiffModule(g), PointSpec(2, Rat(0)), 2);
  REQUIRE(report.verdicts.size() == 2);
  CHECK(report.verdicts[0].exact);
  CHECK(report.verdicts[0].value == Rat(-3));
  CHECK(!report.verdicts[1].exact);
  CHECK(report.verdicts[1].value == make_rat(-1, 4));
  // per-stage bounds strictly increase while the exact verdict persists
  Rat prev_bound;
  bool have_prev = false;
  for (const StageDiagnostics& st : report.stages) {
    const SlopeMultiset& folded = st.inverted;
    REQUIRE(folded.entries.size() == 2);
    CHECK(folded.entries[0] == SlopeEntry::make_exact(Rat(-3)));
    CHECK(!folded.entries[1].exact());
    if (have_prev) CHECK(folded.entries[1].value > prev_bound);
    prev_bound = folded.entries[1].value;
    have_prev = true;
  }
}

TEST_CASE("odd p: boundary slope resolves at stage 1") {
  // G = (1) at p=3: the slope sits exactly on C = -1/2, and one push-forward
  // pins Exact(-1/2) through the junk-count identity
  RadiusReport report = compute_radii(scalar_module(RatFunc(1)), PointSpec(3, Rat(0)), 2);
  REQUIRE(report.verdicts.size() == 1);
  CHECK(report.verdicts[0].exact);
  CHECK(report.verdicts[0].value == make_rat(-1, 2));
  CHECK(report.verdicts[0].stage_found == 1);
  CHECK(!report.stages[0].inverted.entries[0].exact());
}

TEST_CASE("rank 2 with one boundary and one solvable radius, two stages deep") {
  MatrixRF g = MatrixRF::Zero(2, 2);
  g(0, 0) = RatFunc(1);
  g(1, 1) = RatFunc(2);
  RadiusReport report = compute_radii(DiffModule(g), PointSpec(2, Rat(0)), 2);
  REQUIRE(report.verdicts.size() == 2);
  CHECK(report.verdicts[0].exact);
  CHECK(report.verdicts[0].value == Rat(-1));
  CHECK(report.verdicts[0].stage_found == 1);
  CHECK(!report.verdicts[1].exact);
  CHECK(report.verdicts[1].value == make_rat(-1, 4));
  // stage 2 reproduced the stage-1 exact verdict (the merge cross-check ran)
  CHECK(report.stages_used == 2);
  CHECK(report.stages[2].inverted.entries[0] == SlopeEntry::make_exact(Rat(-1)));
}

TEST_CASE("direct-sum additivity") {
  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<long> mdist(1, 4);
  for (int iter = 0; iter < 10; ++iter) {
    long ma = mdist(rng), mb = mdist(rng);
    Rat a = make_rat(1, 1L << ma), b = make_rat(3, 1L << mb);
    DiffModule da = scalar_module(RatFunc(a)), db = scalar_module(RatFunc(b));
    RadiusReport ra = compute_radii(da, PointSpec(2, Rat(0)), 1);
    RadiusReport rb = compute_radii(db, PointSpec(2, Rat(0)), 1);
    RadiusReport rsum = compute_radii(direct_sum(da, db), PointSpec(2, Rat(0)), 1);
    REQUIRE(rsum.verdicts.size() == 2);
    std::vector<Rat> expected{ra.verdicts[0].value, rb.verdicts[0].value};
    std::sort(expected.begin(), expected.end());
    CHECK(rsum.verdicts[0].exact);
    CHECK(rsum.verdicts[1].exact);
    CHECK(rsum.verdicts[0].value == expected[0]);
    CHECK(rsum.verdicts[1].value == expected[1]);
  }
}

TEST_CASE("cyclic-vector independence of the report") {
  // curated module whose a = 0 candidate dies
  Poly T = Poly::variable();
  MatrixRF g = MatrixRF::Zero(2, 2);
  g(0, 0) = RatFunc(Poly(-1), T);
  g(1, 0) = RatFunc(-1);
  DiffModule m(g);

  FindCyclicOptions shift1, shift2;
  shift1.katz_offset = 1;
  shift2.katz_offset = 2;
  RadiusReport r0 = compute_radii(m, PointSpec(2, Rat(0)), 2);
  RadiusReport r1 = compute_radii(m, PointSpec(2, Rat(0)), 2, shift1);
  RadiusReport r2 = compute_radii(m, PointSpec(2, Rat(0)), 2, shift2);
  CHECK(r0.verdicts == r1.verdicts);
  CHECK(r0.verdicts == r2.verdicts);
  CHECK(r0.stages_used == r1.stages_used);
  // different candidates were genuinely chosen at stage 0
  CHECK(r0.stages[0].candidate == "katz:1");
  CHECK(r1.stages[0].candidate == "katz:1");
  CHECK(r2.stages[0].candidate == "katz:2");
}

TEST_CASE("oracle agrees with the minimum exact verdict") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> mdist(1, 4);
  const long primes[] = {2, 3, 5};
  for (int iter = 0; iter < 6; ++iter) {
    long p = primes[static_cast<size_t>(iter) % 3];
    long m = mdist(rng);
    long pm = 1;
    for (long i = 0; i < m; ++i) pm *= p;
    DiffModule mod = scalar_module(RatFunc(make_rat(1, pm)));
    PointSpec pt(p, Rat(0));
    RadiusReport report = compute_radii(mod, pt, 0);
    REQUIRE(report.verdicts[0].exact);
    TaylorGrowth growth = estimate_lambda1(mod, pt, 60);
    Rat err = growth.estimate - report.verdicts[0].value;
    if (err < 0) err = -err;
    CHECK(err <= make_rat(1, 10));
  }
}

TEST_CASE("max_stages = 0 and input validation") {
  RadiusReport report =
      compute_radii(companion_module(first_order(RatFunc(-1))), PointSpec(2, Rat(0)), 0);
  CHECK(!report.verdicts[0].exact);
  CHECK(report.stages_used == 0);
  CHECK_THROWS_AS(
      compute_radii(DiffModule(MatrixRF::Zero(1, 1)), PointSpec(2, Rat(0)), -1),
      std::invalid_argument);
}

TEST_CASE("degree cap exhaustion reports a truncated run") {
  long old_cap = poly_degree_cap();
  set_poly_degree_cap(2);
  RadiusReport report =
      compute_radii(DiffModule(MatrixRF::Zero(1, 1)), PointSpec(2, Rat(0)), 3);
  set_poly_degree_cap(old_cap);
  CHECK(report.truncated.has_value());
  CHECK(report.stages_used < 3);
  // the completed stages still produced their censored verdict
  REQUIRE(report.verdicts.size() == 1);
  CHECK(!report.verdicts[0].exact);
}
