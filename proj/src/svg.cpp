#include <algorithm>
#include <sstream>

#include "padic/io.hpp"

namespace padic {

// Doubles appear here and only here: the picture carries no semantics.
std::string polygon_to_svg(const NewtonPolygon& np, const PointSpec& pt) {
  const double width = 480, height = 360, margin = 48;
  double xmin = 0, xmax = static_cast<double>(np.order());
  if (xmax < 1) xmax = 1;
  double ymin = 0, ymax = 0;
  auto see = [&](double y) {
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (size_t i = 0; i < np.points.size(); ++i)
    if (np.points[i].is_finite()) see(np.points[i].value().get_d());
  const double cutoff = pt.cutoff().get_d();
  see(cutoff * xmax);
  if (ymax - ymin < 1e-9) ymax = ymin + 1;

  auto sx = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
  auto sy = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  svg << "  <line x1=\"" << sx(xmin) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(xmax)
      << "\" y2=\"" << sy(0) << "\" stroke=\"#bbb\"/>\n";
  svg << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(ymin) << "\" x2=\"" << sx(0)
      << "\" y2=\"" << sy(ymax) << "\" stroke=\"#bbb\"/>\n";
  // Young cutoff line y = C*x
  svg << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(xmax)
      << "\" y2=\"" << sy(cutoff * xmax)
      << "\" stroke=\"#d33\" stroke-dasharray=\"6 4\"/>\n";
  svg << "  <text x=\"" << sx(xmax) - 80 << "\" y=\"" << sy(cutoff * xmax) - 6
      << "\" font-size=\"12\" fill=\"#d33\">slope C = " << to_string(pt.cutoff())
      << "</text>\n";
  // lower hull
  if (!np.vertices.empty()) {
    svg << "  <polyline fill=\"none\" stroke=\"#1560bd\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : np.vertices) svg << sx(x) << "," << sy(y.get_d()) << " ";
    svg << "\"/>\n";
  }
  // points (i, V_i)
  for (size_t i = 0; i < np.points.size(); ++i) {
    if (!np.points[i].is_finite()) continue;
    svg << "  <circle cx=\"" << sx(static_cast<double>(i)) << "\" cy=\""
        << sy(np.points[i].value().get_d()) << "\" r=\"3.5\" fill=\"#1560bd\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace padic
