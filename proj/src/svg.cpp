#include "aconvex/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aconvex/error.hpp"
#include "aconvex/io.hpp"

namespace aconvex {

namespace {

constexpr double kWidth = 800.0;
constexpr double kSlopeHeight = 220.0;
constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#17becf"};

struct Box {
  double lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
  bool empty = true;

  void add(Vec2 p) {
    if (empty) {
      lo_x = hi_x = p.x;
      lo_y = hi_y = p.y;
      empty = false;
      return;
    }
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct View {
  Box box;
  double scale = 1.0;
  double height = 0.0;

  Vec2 map(Vec2 p) const {
    return {(p.x - box.lo_x) * scale, height - (p.y - box.lo_y) * scale};
  }
};

View fit(Box box) {
  if (box.empty) box.add({0, 0});
  double w = box.hi_x - box.lo_x;
  double h = box.hi_y - box.lo_y;
  const double side = std::max({w, h, 1e-12});
  if (w < 1e-12 * side) w = side;
  if (h < 1e-12 * side) h = side;
  const double mx = 0.05 * w;
  const double my = 0.05 * h;
  box.lo_x -= mx;
  box.hi_x += mx;
  box.lo_y -= my;
  box.hi_y += my;
  View view;
  view.box = box;
  view.scale = kWidth / (box.hi_x - box.lo_x);
  view.height = (box.hi_y - box.lo_y) * view.scale;
  if (view.height > 1.5 * kWidth) {
    view.scale *= 1.5 * kWidth / view.height;
    view.height = 1.5 * kWidth;
  }
  return view;
}

void slope_panel(std::ostringstream& out, const Polygon& k, const std::string& label,
                 const std::string& color, double top) {
  const std::size_t n = k.size();
  std::vector<double> slope(n);
  std::vector<double> start(n + 1, 0.0);
  slope[0] = std::atan2(k.edge(0).y, k.edge(0).x);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) slope[i] = slope[i - 1] + k.vertex_turn(i);
    start[i + 1] = start[i] + k.edge(i).norm();
  }
  const double total = start[n];
  const auto [lo_it, hi_it] = std::minmax_element(slope.begin(), slope.end());
  const double lo = *lo_it - 0.2;
  const double hi = *hi_it + 0.2;
  const double pad = 40.0;
  const double plot_h = kSlopeHeight - 2 * pad;
  const double plot_w = kWidth - 2 * pad;
  auto sx = [&](double s) { return pad + plot_w * s / total; };
  auto sy = [&](double a) { return top + pad + plot_h * (hi - a) / (hi - lo); };

  out << "  <g class=\"slope-diagram\">\n";
  out << "    <rect x=\"" << num(pad) << "\" y=\"" << num(top + pad) << "\" width=\"" << num(plot_w)
      << "\" height=\"" << num(plot_h) << "\" fill=\"none\" stroke=\"#999\"/>\n";
  const AcoReport aco = aco_polygon(k);
  const std::size_t wlen = aco.turn_count(n, true);
  std::vector<bool> in_witness(n, false);
  if (wlen > 0) {
    for (std::size_t j = 0; j <= wlen; ++j) in_witness[(aco.witness_start + j) % n] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out << "    <line x1=\"" << num(sx(start[i])) << "\" y1=\"" << num(sy(slope[i])) << "\" x2=\""
        << num(sx(start[i + 1])) << "\" y2=\"" << num(sy(slope[i])) << "\" stroke=\""
        << (in_witness[i] ? "#d62728" : color) << "\" stroke-width=\""
        << (in_witness[i] ? "3" : "2") << "\"/>\n";
    if (i + 1 < n) {
      out << "    <line x1=\"" << num(sx(start[i + 1])) << "\" y1=\"" << num(sy(slope[i]))
          << "\" x2=\"" << num(sx(start[i + 1])) << "\" y2=\"" << num(sy(slope[i + 1]))
          << "\" stroke=\"" << color << "\" stroke-dasharray=\"3,2\"/>\n";
    }
  }
  out << "    <text x=\"" << num(pad) << "\" y=\"" << num(top + pad - 8)
      << "\" font-family=\"sans-serif\" font-size=\"13\">" << label
      << " slope angle vs arc length, aco = " << format_angle(aco.value) << "</text>\n";
  out << "    <text x=\"" << num(kWidth - pad) << "\" y=\"" << num(top + kSlopeHeight - 12)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"end\">T = "
      << format_real(total) << "</text>\n";
  out << "  </g>\n";
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
  Box box;
  for (const auto& item : scene.polygons) {
    for (const Vec2& v : item.polygon.vertices()) box.add(v);
  }
  for (const AngularRegion& r : scene.regions) box.add(r.apex);
  const View view = fit(box);
  const double slope_total =
      scene.slope_diagrams ? kSlopeHeight * static_cast<double>(scene.polygons.size()) : 0.0;
  const double height = view.height + slope_total;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kWidth)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(kWidth) << " " << num(height)
      << "\">\n";
  out << "  <defs>\n    <clipPath id=\"plan\"><rect x=\"0\" y=\"0\" width=\"" << num(kWidth)
      << "\" height=\"" << num(view.height) << "\"/></clipPath>\n  </defs>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(height)
      << "\" fill=\"white\"/>\n";

  const double reach = 4.0 * std::max(view.box.hi_x - view.box.lo_x, view.box.hi_y - view.box.lo_y);
  out << "  <g clip-path=\"url(#plan)\">\n";
  for (const AngularRegion& r : scene.regions) {
    out << "    <polygon class=\"region\" fill=\"#d62728\" fill-opacity=\"0.2\" stroke=\"#d62728\" points=\"";
    const Vec2 a = view.map(r.apex);
    out << num(a.x) << "," << num(a.y);
    const int steps = 24;
    for (int s = 0; s <= steps; ++s) {
      const Vec2 dir = rotated(r.ray1_dir, r.measure * s / steps);
      const Vec2 p = view.map(r.apex + dir * reach);
      out << " " << num(p.x) << "," << num(p.y);
    }
    out << "\"/>\n";
    out << "    <circle cx=\"" << num(a.x) << "\" cy=\"" << num(a.y)
        << "\" r=\"4\" fill=\"#d62728\"/>\n";
  }
  for (std::size_t i = 0; i < scene.polygons.size(); ++i) {
    const auto& item = scene.polygons[i];
    const char* color = kPalette[i % std::size(kPalette)];
    out << "    <polygon class=\"polygon\" fill=\"" << color << "\" fill-opacity=\"0.3\" stroke=\""
        << color << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const Vec2& v : item.polygon.vertices()) {
      const Vec2 p = view.map(v);
      out << (first ? "" : " ") << num(p.x) << "," << num(p.y);
      first = false;
    }
    out << "\"><title>" << item.label << "</title></polygon>\n";
  }
  out << "  </g>\n";

  if (scene.slope_diagrams) {
    for (std::size_t i = 0; i < scene.polygons.size(); ++i) {
      slope_panel(out, scene.polygons[i].polygon, scene.polygons[i].label,
                  kPalette[i % std::size(kPalette)],
                  view.height + kSlopeHeight * static_cast<double>(i));
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace aconvex
