#pragma once

#include <optional>
#include <string>

#include "padic/frobenius.hpp"

namespace padic {

// What one stage saw: which cyclic candidate won, the polygon it produced,
// and the constraints after folding back down to the original point.
struct StageDiagnostics {
  int stage = 0;
  Index module_rank = 0;
  std::string candidate;
  long candidate_index = 0;
  NewtonPolygon polygon;
  SlopeMultiset young;     // at the stage's point
  SlopeMultiset inverted;  // folded back to the original point
};

struct Verdict {
  bool exact = false;
  Rat value;            // the log-radius, or the standing lower bound
  int stage_found = 0;  // stage that pinned (or last improved) this index

  friend bool operator==(const Verdict& a, const Verdict& b) {
    return a.exact == b.exact && a.value == b.value;
  }
};

struct RadiusReport {
  PointSpec point;
  std::vector<Verdict> verdicts;  // exact values ascending, then bounds
  int stages_used = 0;
  std::vector<StageDiagnostics> stages;
  // Set when a degree-cap abort cut the run short; verdicts hold the last
  // completed stage.
  std::optional<std::string> truncated;

  bool all_exact() const;
};

// One stage: cyclic vector -> operator -> polygon -> Young.
SlopeMultiset stage_analyze(const DiffModule& m, const PointSpec& pt,
                            StageDiagnostics* diag = nullptr,
                            const FindCyclicOptions& opts = {});

// The staged algorithm: stage 0 reads the module directly; stage k reads
// the k-fold push-forward (rank r p^k at p^k t) and folds the constraints
// back down.  Exact verdicts are final the first time they appear and are
// cross-checked against every later stage; censored indices improve to the
// bound t - 1/(p^k (p-1)) and can never resolve past the stage budget when
// the radius is solvable.
RadiusReport compute_radii(const DiffModule& m, const PointSpec& pt, int max_stages = 3,
                           const FindCyclicOptions& opts = {});

}  // namespace padic
