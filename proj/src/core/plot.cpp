#include "core/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace pld {

namespace {

constexpr int kPanelW = 460;
constexpr int kPanelH = 430;
constexpr int kMarginL = 58, kMarginR = 18, kMarginT = 34, kMarginB = 44;

struct Box {
  double xmin, xmax, ymin, ymax;
};

Box bounding_box(const Panel& p) {
  Box b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
        std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& c : p.curves)
    for (const auto& pt : c.points) {
      b.xmin = std::min(b.xmin, pt[0]);
      b.xmax = std::max(b.xmax, pt[0]);
      b.ymin = std::min(b.ymin, pt[1]);
      b.ymax = std::max(b.ymax, pt[1]);
    }
  if (!std::isfinite(b.xmin)) b = {0, 1, 0, 1};
  auto pad = [](double& lo, double& hi) {
    double d = hi - lo;
    if (d <= 0) d = std::max(1.0, std::abs(hi));
    lo -= 0.06 * d;
    hi += 0.06 * d;
  };
  pad(b.xmin, b.xmax);
  pad(b.ymin, b.ymax);
  return b;
}

}  // namespace

std::vector<std::array<double, 2>> decimate(const std::vector<std::array<double, 2>>& pts,
                                            size_t max_points) {
  if (pts.size() <= max_points || max_points < 2) return pts;
  std::vector<std::array<double, 2>> out;
  out.reserve(max_points + 1);
  const double stride = static_cast<double>(pts.size() - 1) / (max_points - 1);
  for (size_t i = 0; i < max_points; ++i)
    out.push_back(pts[static_cast<size_t>(std::llround(i * stride))]);
  return out;
}

void write_svg(const std::vector<Panel>& panels, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw std::runtime_error("cannot open '" + path + "' for writing");

  const int width = kPanelW * static_cast<int>(panels.size());
  int height = kPanelH;
  for (const auto& p : panels)
    height = std::max(height, kPanelH + 14 * static_cast<int>(p.annotations.size() +
                                                              p.curves.size()));
  std::fprintf(fp,
               "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
               "viewBox=\"0 0 %d %d\" font-family=\"sans-serif\" font-size=\"11\">\n",
               width, height, width, height);
  std::fprintf(fp, "<rect width=\"%d\" height=\"%d\" fill=\"white\"/>\n", width, height);

  for (size_t pi = 0; pi < panels.size(); ++pi) {
    const Panel& p = panels[pi];
    const double x0 = pi * kPanelW + kMarginL;
    const double y0 = kMarginT;
    const double plot_w = kPanelW - kMarginL - kMarginR;
    const double plot_h = kPanelH - kMarginT - kMarginB;
    const Box b = bounding_box(p);

    auto sx = [&](double x) { return x0 + (x - b.xmin) / (b.xmax - b.xmin) * plot_w; };
    auto sy = [&](double y) { return y0 + plot_h - (y - b.ymin) / (b.ymax - b.ymin) * plot_h; };

    std::fprintf(fp, "<g>\n");
    std::fprintf(fp,
                 "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                 "stroke=\"#444\"/>\n",
                 x0, y0, plot_w, plot_h);
    std::fprintf(fp, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" font-size=\"13\">%s</text>\n",
                 x0 + plot_w / 2, y0 - 12.0, p.title.c_str());

    for (int t = 0; t <= 4; ++t) {
      const double fx = b.xmin + (b.xmax - b.xmin) * t / 4.0;
      const double fy = b.ymin + (b.ymax - b.ymin) * t / 4.0;
      std::fprintf(fp, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#444\"/>\n",
                   sx(fx), y0 + plot_h, sx(fx), y0 + plot_h + 4);
      std::fprintf(fp, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%.3g</text>\n", sx(fx),
                   y0 + plot_h + 16, fx);
      std::fprintf(fp, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#444\"/>\n",
                   x0 - 4, sy(fy), x0, sy(fy));
      std::fprintf(fp, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\">%.3g</text>\n", x0 - 7,
                   sy(fy) + 4, fy);
    }
    std::fprintf(fp, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%s</text>\n",
                 x0 + plot_w / 2, y0 + plot_h + 32.0, p.xlabel.c_str());
    std::fprintf(fp,
                 "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" transform=\"rotate(-90 "
                 "%.1f %.1f)\">%s</text>\n",
                 x0 - 42, y0 + plot_h / 2, x0 - 42, y0 + plot_h / 2, p.ylabel.c_str());

    for (const auto& c : p.curves) {
      const auto pts = decimate(c.points, 2500);
      std::fprintf(fp, "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1\" points=\"",
                   c.color.c_str());
      for (const auto& pt : pts) std::fprintf(fp, "%.2f,%.2f ", sx(pt[0]), sy(pt[1]));
      std::fprintf(fp, "\"/>\n");
    }

    double ty = kPanelH - 6.0;
    for (size_t ci = 0; ci < p.curves.size(); ++ci) {
      if (p.curves[ci].label.empty()) continue;
      std::fprintf(fp,
                   "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"%s\" "
                   "stroke-width=\"2\"/>\n",
                   x0, ty - 4, x0 + 18, ty - 4, p.curves[ci].color.c_str());
      std::fprintf(fp, "<text x=\"%.1f\" y=\"%.1f\">%s</text>\n", x0 + 24, ty,
                   p.curves[ci].label.c_str());
      ty += 14;
    }
    for (const auto& note : p.annotations) {
      std::fprintf(fp, "<text x=\"%.1f\" y=\"%.1f\" fill=\"#333\">%s</text>\n", x0, ty,
                   note.c_str());
      ty += 14;
    }
    std::fprintf(fp, "</g>\n");
  }
  std::fprintf(fp, "</svg>\n");
  std::fclose(fp);
}

}  // namespace pld
