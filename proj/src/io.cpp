#include "padic/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "padic/expr.hpp"

namespace padic {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

RatFunc parse_entry(const json& node, const std::string& where) {
  if (!node.is_string())
    throw ProblemError(where + ": expected an expression string");
  try {
    return parse_ratfunc(node.get<std::string>());
  } catch (const ParseError& err) {
    throw ProblemError(where + ": " + err.what());
  }
}

ordered rat_pair(long x, const ExtVal& y) {
  return ordered::array({std::to_string(x), to_string(y)});
}

ordered entries_json(const SlopeMultiset& s) {
  ordered arr = ordered::array();
  for (const SlopeEntry& e : s.entries) {
    ordered item;
    item[e.exact() ? "exact" : "at_least"] = to_string(e.value);
    arr.push_back(std::move(item));
  }
  return arr;
}

ordered vertices_json(const std::vector<std::pair<long, Rat>>& vertices) {
  ordered arr = ordered::array();
  for (const auto& [x, y] : vertices)
    arr.push_back(ordered::array({std::to_string(x), to_string(y)}));
  return arr;
}

}  // namespace

DiffModule ProblemFile::as_module() const {
  if (module) return *module;
  return companion_module(*op);
}

ProblemFile parse_problem(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ProblemError(std::string("problem file: ") + err.what());
  }
  if (!doc.is_object()) throw ProblemError("problem file: expected a JSON object");

  if (!doc.contains("p") || !doc["p"].is_number_integer())
    throw ProblemError("problem file: missing integer field 'p'");
  long p = doc["p"].get<long>();
  if (!is_prime(p)) throw ProblemError("problem file: 'p' must be prime");

  if (!doc.contains("log_radius") || !doc["log_radius"].is_string())
    throw ProblemError("problem file: missing string field 'log_radius'");
  Rat t;
  try {
    t = parse_rat(doc["log_radius"].get<std::string>());
  } catch (const std::invalid_argument& err) {
    throw ProblemError(std::string("log_radius: ") + err.what());
  }

  ProblemFile pf{PointSpec(p, t), std::nullopt, std::nullopt, 3, 512, 60};

  const bool has_module = doc.contains("module");
  const bool has_operator = doc.contains("operator");
  if (has_module == has_operator)
    throw ProblemError("problem file: provide exactly one of 'module' or 'operator'");

  if (has_module) {
    const json& mod = doc["module"];
    if (!mod.is_object() || !mod.contains("matrix") || !mod["matrix"].is_array())
      throw ProblemError("module: expected an object with a 'matrix' array");
    const json& rows = mod["matrix"];
    const size_t r = rows.size();
    if (r == 0) throw ProblemError("module.matrix: must be nonempty");
    MatrixRF g(static_cast<Index>(r), static_cast<Index>(r));
    for (size_t i = 0; i < r; ++i) {
      if (!rows[i].is_array() || rows[i].size() != r)
        throw ProblemError("module.matrix: must be square");
      for (size_t j = 0; j < r; ++j)
        g(static_cast<Index>(i), static_cast<Index>(j)) =
            parse_entry(rows[i][j], "module.matrix[" + std::to_string(i) + "][" +
                                        std::to_string(j) + "]");
    }
    pf.module = DiffModule(std::move(g));
  } else {
    const json& opnode = doc["operator"];
    if (!opnode.is_object() || !opnode.contains("coeffs") || !opnode["coeffs"].is_array())
      throw ProblemError("operator: expected an object with a 'coeffs' array");
    const json& coeffs = opnode["coeffs"];
    if (coeffs.empty()) throw ProblemError("operator.coeffs: must be nonempty");
    DiffOperator op;
    for (size_t i = 0; i < coeffs.size(); ++i)
      op.g.push_back(parse_entry(coeffs[i], "operator.coeffs[" + std::to_string(i) + "]"));
    pf.op = std::move(op);
  }

  auto read_int = [&doc](const char* key, long fallback, long lo, long hi) {
    if (!doc.contains(key)) return fallback;
    if (!doc[key].is_number_integer())
      throw ProblemError(std::string(key) + ": expected an integer");
    long v = doc[key].get<long>();
    if (v < lo || v > hi)
      throw ProblemError(std::string(key) + ": out of range [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    return v;
  };
  pf.max_stages = static_cast<int>(read_int("max_stages", 3, 0, 16));
  pf.degree_cap = read_int("degree_cap", 512, 1, 1L << 20);
  pf.oracle_terms = static_cast<int>(read_int("oracle_terms", 60, 8, 4096));
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError("cannot open problem file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string report_to_json(const RadiusReport& report, int max_stages) {
  ordered doc;
  doc["p"] = report.point.p;
  doc["log_radius"] = to_string(report.point.t);
  doc["rank"] = static_cast<long>(report.verdicts.size());
  doc["max_stages"] = max_stages;
  doc["stages_used"] = report.stages_used;
  doc["all_exact"] = report.all_exact();
  ordered verdicts = ordered::array();
  for (const Verdict& v : report.verdicts) {
    ordered item;
    item[v.exact ? "exact" : "at_least"] = to_string(v.value);
    item["stage_found"] = v.stage_found;
    verdicts.push_back(std::move(item));
  }
  doc["verdicts"] = std::move(verdicts);
  ordered stages = ordered::array();
  for (const StageDiagnostics& st : report.stages) {
    ordered item;
    item["stage"] = st.stage;
    item["rank"] = static_cast<long>(st.module_rank);
    item["candidate"] = st.candidate;
    item["candidate_index"] = st.candidate_index;
    item["polygon_vertices"] = vertices_json(st.polygon.vertices);
    item["young"] = entries_json(st.young);
    item["constraints"] = entries_json(st.inverted);
    stages.push_back(std::move(item));
  }
  doc["stages"] = std::move(stages);
  if (report.truncated) doc["truncated"] = *report.truncated;
  return doc.dump(2) + "\n";
}

std::string report_to_text(const RadiusReport& report, int max_stages) {
  std::ostringstream out;
  out << "point: p=" << report.point.p << ", log_radius=" << to_string(report.point.t)
      << "\n";
  out << "rank " << report.verdicts.size() << ", stages used " << report.stages_used << "/"
      << max_stages << (report.all_exact() ? ", all exact" : ", budget exhausted") << "\n";
  for (size_t i = 0; i < report.verdicts.size(); ++i) {
    const Verdict& v = report.verdicts[i];
    out << "R_" << (i + 1) << ": ";
    if (v.exact)
      out << "exact log-radius " << to_string(v.value) << " (stage " << v.stage_found << ")";
    else
      out << "log-radius >= " << to_string(v.value) << " (exact value in ["
          << to_string(v.value) << ", " << to_string(report.point.t)
          << "]; stage budget exhausted)";
    out << "\n";
  }
  if (report.truncated) out << "truncated: " << *report.truncated << "\n";
  return out.str();
}

std::string pushforward_to_json(const DiffModule& pushed, const PointSpec& pushed_pt) {
  ordered doc;
  doc["p"] = pushed_pt.p;
  doc["log_radius"] = to_string(pushed_pt.t);
  doc["rank"] = static_cast<long>(pushed.rank());
  ordered rows = ordered::array();
  for (Index i = 0; i < pushed.rank(); ++i) {
    ordered row = ordered::array();
    for (Index j = 0; j < pushed.rank(); ++j) row.push_back(to_expr_string(pushed.G(i, j)));
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string polygon_to_json(const NewtonPolygon& np, const PointSpec& pt) {
  ordered doc;
  doc["p"] = pt.p;
  doc["log_radius"] = to_string(pt.t);
  doc["order"] = static_cast<long>(np.order());
  doc["cutoff"] = to_string(pt.cutoff());
  ordered points = ordered::array();
  for (size_t i = 0; i < np.points.size(); ++i)
    points.push_back(rat_pair(static_cast<long>(i), np.points[i]));
  doc["points"] = std::move(points);
  doc["vertices"] = vertices_json(np.vertices);
  ordered slopes = ordered::array();
  for (const ExtVal& s : np.slopes) slopes.push_back(to_string(s));
  doc["slopes"] = std::move(slopes);
  return doc.dump(2) + "\n";
}

std::string oracle_to_json(const TaylorGrowth& growth) {
  ordered doc;
  doc["p"] = growth.point.p;
  doc["log_radius"] = to_string(growth.point.t);
  doc["terms"] = growth.terms;
  doc["estimate"] = to_string(growth.estimate);
  ordered window = ordered::array();
  for (int n = growth.window_begin; n <= growth.terms; ++n) {
    ordered row;
    row["n"] = n;
    row["w"] = to_string(growth.w[static_cast<size_t>(n)]);
    row["ratio"] = to_string(growth.ratio(n));
    window.push_back(std::move(row));
  }
  doc["window"] = std::move(window);
  return doc.dump(2) + "\n";
}

}  // namespace padic
