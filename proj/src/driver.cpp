#include "padic/driver.hpp"

#include <algorithm>

namespace padic {

bool RadiusReport::all_exact() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.exact; });
}

SlopeMultiset stage_analyze(const DiffModule& m, const PointSpec& pt,
                            StageDiagnostics* diag, const FindCyclicOptions& opts) {
  CyclicVector cyc = find_cyclic(m, opts);
  DiffOperator op = operator_from_cyclic(m, cyc.c);
  NewtonPolygon np = polygon_of_operator(op, pt);
  SlopeMultiset young = young_compare(np, pt);
  if (diag) {
    diag->module_rank = m.rank();
    diag->candidate = cyc.candidate;
    diag->candidate_index = cyc.candidate_index;
    diag->polygon = np;
    diag->young = young;
  }
  return young;
}

namespace {

// Positional merge: sorted constraints line up index by index, exact
// verdicts must be reproduced, censored ones must strictly improve.
void merge_stage(std::vector<Verdict>& current, const SlopeMultiset& stage_result,
                 int stage) {
  if (current.empty()) {
    for (const SlopeEntry& e : stage_result.entries)
      current.push_back(Verdict{e.exact(), e.value, stage});
    return;
  }
  if (current.size() != stage_result.entries.size())
    throw std::logic_error("compute_radii: stage changed the verdict count");
  for (size_t i = 0; i < current.size(); ++i) {
    const SlopeEntry& e = stage_result.entries[i];
    Verdict& v = current[i];
    if (v.exact) {
      if (!e.exact() || e.value != v.value)
        throw std::logic_error("compute_radii: stage " + std::to_string(stage) +
                               " contradicts an exact verdict");
      continue;
    }
    if (e.exact()) {
      if (e.value < v.value)
        throw std::logic_error("compute_radii: exact value below the standing bound");
      v = Verdict{true, e.value, stage};
    } else {
      if (e.value <= v.value)
        throw std::logic_error("compute_radii: censoring bound failed to improve");
      v = Verdict{false, e.value, stage};
    }
  }
}

}  // namespace

RadiusReport compute_radii(const DiffModule& m, const PointSpec& pt, int max_stages,
                           const FindCyclicOptions& opts) {
  if (max_stages < 0) throw std::invalid_argument("compute_radii: max_stages must be >= 0");
  RadiusReport report{pt, {}, 0, {}, std::nullopt};
  DiffModule current = m;
  PointSpec stage_pt = pt;
  for (int stage = 0; stage <= max_stages; ++stage) {
    StageDiagnostics diag;
    diag.stage = stage;
    SlopeMultiset folded{pt, {}};
    try {
      if (stage > 0) {
        auto pushed = pushforward(current, stage_pt);
        current = std::move(pushed.first);
        stage_pt = pushed.second;
      }
      SlopeMultiset stage_set = stage_analyze(current, stage_pt, &diag, opts);
      // Fold back down one level at a time; target ranks r p^{k-1}, ..., r.
      folded = stage_set;
      Index target = current.rank();
      for (int level = stage; level >= 1; --level) {
        target /= stage_pt.p;
        folded = invert_slopes(folded, target);
      }
    } catch (const DegreeCapError& err) {
      report.truncated = "stage " + std::to_string(stage) + " aborted: " + err.what();
      break;
    }
    diag.inverted = folded;
    merge_stage(report.verdicts, folded, stage);
    report.stages.push_back(std::move(diag));
    report.stages_used = stage;
    if (report.all_exact()) break;
  }
  return report;
}

}  // namespace padic
