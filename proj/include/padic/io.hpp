#pragma once

#include "padic/driver.hpp"
#include "padic/oracle.hpp"

namespace padic {

// Input or schema problem in a problem file; the message carries enough
// position context to fix the file.
class ProblemError : public std::runtime_error {
 public:
  explicit ProblemError(const std::string& message) : std::runtime_error(message) {}
};

// One batch job: the point, the module (directly or as an operator), and
// the run knobs.  All exact numbers travel as strings.
struct ProblemFile {
  PointSpec point;
  std::optional<DiffModule> module;
  std::optional<DiffOperator> op;
  int max_stages = 3;
  long degree_cap = 512;
  int oracle_terms = 60;

  // The module itself, or the companion of the operator.
  DiffModule as_module() const;
};

ProblemFile parse_problem(const std::string& json_text);
ProblemFile load_problem(const std::string& path);

// Deterministic (byte-stable) serializers.
std::string report_to_json(const RadiusReport& report, int max_stages);
std::string report_to_text(const RadiusReport& report, int max_stages);
std::string pushforward_to_json(const DiffModule& pushed, const PointSpec& pushed_pt);
std::string polygon_to_json(const NewtonPolygon& np, const PointSpec& pt);
std::string oracle_to_json(const TaylorGrowth& growth);

// Decorative rendering of the lower hull with the Young cutoff line; the
// exact vertices are the interface, the picture is not.
std::string polygon_to_svg(const NewtonPolygon& np, const PointSpec& pt);

}  // namespace padic
