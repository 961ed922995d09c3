#pragma once

#include <string>
#include <vector>

#include "aconvex/geom.hpp"
#include "aconvex/separation.hpp"

namespace aconvex {

struct SvgScene {
  struct Item {
    std::string label;
    Polygon polygon;
  };
  std::vector<Item> polygons;
  std::vector<AngularRegion> regions;
  /// Adds one slope diagram per polygon: edge slope angle against arc
  /// length, with the aco witness arc highlighted.
  bool slope_diagrams = false;
};

/// SVG 1.1 document. The plan view is fitted to the union bounding box of
/// polygons and region apexes with a 5% margin.
std::string render_svg(const SvgScene& scene);

}  // namespace aconvex
