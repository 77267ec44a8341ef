#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "padic/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitBudgetExhausted = 2;

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw padic::ProblemError("cannot write: " + path);
  out << body;
}

void emit(const std::string& body, const std::string& output_path) {
  if (output_path.empty())
    std::cout << body;
  else
    write_file(output_path, body);
}

int run_radii(const std::string& input, int max_stages_flag, const std::string& format,
              const std::string& svg_path, const std::string& output_path) {
  padic::ProblemFile pf = padic::load_problem(input);
  padic::set_poly_degree_cap(pf.degree_cap);
  int max_stages = max_stages_flag >= 0 ? max_stages_flag : pf.max_stages;
  padic::RadiusReport report =
      padic::compute_radii(pf.as_module(), pf.point, max_stages);
  emit(format == "text" ? padic::report_to_text(report, max_stages)
                        : padic::report_to_json(report, max_stages),
       output_path);
  if (!svg_path.empty() && !report.stages.empty()) {
    // Stage 0 holds the polygon of the input module itself.
    write_file(svg_path, padic::polygon_to_svg(report.stages.front().polygon, pf.point));
  }
  return report.all_exact() ? kExitOk : kExitBudgetExhausted;
}

int run_pushforward(const std::string& input, const std::string& output_path) {
  padic::ProblemFile pf = padic::load_problem(input);
  padic::set_poly_degree_cap(pf.degree_cap);
  auto [pushed, pushed_pt] = padic::pushforward(pf.as_module(), pf.point);
  emit(padic::pushforward_to_json(pushed, pushed_pt), output_path);
  return kExitOk;
}

int run_polygon(const std::string& input, const std::string& svg_path,
                const std::string& output_path) {
  padic::ProblemFile pf = padic::load_problem(input);
  padic::set_poly_degree_cap(pf.degree_cap);
  if (!pf.op)
    throw padic::ProblemError("polygon: requires an 'operator' input");
  padic::NewtonPolygon np = padic::polygon_of_operator(*pf.op, pf.point);
  emit(padic::polygon_to_json(np, pf.point), output_path);
  if (!svg_path.empty()) write_file(svg_path, padic::polygon_to_svg(np, pf.point));
  return kExitOk;
}

int run_oracle(const std::string& input, int terms_flag, const std::string& output_path) {
  padic::ProblemFile pf = padic::load_problem(input);
  padic::set_poly_degree_cap(pf.degree_cap);
  int terms = terms_flag > 0 ? terms_flag : pf.oracle_terms;
  padic::TaylorGrowth growth = padic::estimate_lambda1(pf.as_module(), pf.point, terms);
  emit(padic::oracle_to_json(growth), output_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact radii of convergence of p-adic differential modules at Gauss points"};
  app.require_subcommand(1);

  std::string input, format = "json", svg_path, output_path;
  int max_stages = -1, terms = -1;

  CLI::App* radii = app.add_subcommand(
      "radii", "compute all radii: polygon + Young, refined through Frobenius push-forwards");
  radii->add_option("--input", input, "problem file (JSON)")->required();
  radii->add_option("--max-stages", max_stages, "push-forward budget (overrides the file)")
      ->check(CLI::NonNegativeNumber);
  radii->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  radii->add_option("--svg", svg_path, "write the stage-0 polygon as SVG");
  radii->add_option("--output", output_path, "write the report here instead of stdout");

  CLI::App* push = app.add_subcommand("pushforward", "emit the pushed connection matrix");
  push->add_option("--input", input, "problem file (JSON)")->required();
  push->add_option("--output", output_path, "write the matrix here instead of stdout");

  CLI::App* polygon = app.add_subcommand("polygon", "emit the operator Newton polygon");
  polygon->add_option("--input", input, "problem file (JSON)")->required();
  polygon->add_option("--svg", svg_path, "write an SVG rendering");
  polygon->add_option("--output", output_path, "write the vertex list here instead of stdout");

  CLI::App* oracle = app.add_subcommand("oracle", "Taylor-growth estimate of the smallest radius");
  oracle->add_option("--input", input, "problem file (JSON)")->required();
  oracle->add_option("--terms", terms, "number of Taylor terms (overrides the file)")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--output", output_path, "write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (radii->parsed()) return run_radii(input, max_stages, format, svg_path, output_path);
    if (push->parsed()) return run_pushforward(input, output_path);
    if (polygon->parsed()) return run_polygon(input, svg_path, output_path);
    if (oracle->parsed()) return run_oracle(input, terms, output_path);
  } catch (const padic::ProblemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const padic::DegreeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudgetExhausted;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
