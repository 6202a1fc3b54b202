#ifndef PLD_CORE_PLOT_HPP
#define PLD_CORE_PLOT_HPP

#include <array>
#include <string>
#include <vector>

// Minimal self-contained SVG output: axes, ticks, polyline curves, legend
// and annotation lines. No plotting dependency; files are static documents.

namespace pld {

struct Curve {
  std::vector<std::array<double, 2>> points;
  std::string color = "black";
  std::string label;
};

struct Panel {
  std::string title;
  std::string xlabel = "x";
  std::string ylabel = "y";
  std::vector<Curve> curves;
  std::vector<std::string> annotations;
};

void write_svg(const std::vector<Panel>& panels, const std::string& path);

// Keeps at most max_points per curve (uniform stride).
std::vector<std::array<double, 2>> decimate(const std::vector<std::array<double, 2>>& pts,
                                            size_t max_points);

}  // namespace pld

#endif
