#pragma once

// Polygon documents and plain-text reports.
//
// A polygon document is a JSON object:
//
//   {
//     "name": "lshape",
//     "vertices": [[0, 0], [2, 0], [2, 1], [1, 1], [1, 2], [0, 2]]
//   }
//
// Vertices may be listed in either orientation and may repeat the first
// vertex at the end; loading normalizes to counterclockwise.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aconvex/geom.hpp"

namespace aconvex {

struct PolygonDocument {
  std::string name;
  Polygon polygon;
};

/// Throws ParseError (with line and column) for malformed text, NotSimple or
/// DegenerateArea for invalid geometry.
PolygonDocument parse_polygon(std::string_view text);
std::string serialize_polygon(const Polygon& k, std::string_view name = "");

PolygonDocument load_polygon(const std::string& path);
void save_polygon(const std::string& path, const Polygon& k, std::string_view name = "");

/// Radians with 12 significant digits.
std::string format_angle(double radians);
std::string format_real(double value);

/// One-line `key=value` report builder.
class Report {
 public:
  Report& add(std::string key, std::string value);
  Report& add(std::string key, bool value);
  Report& add(std::string key, std::size_t value);
  Report& angle(std::string key, double radians, bool degrees = false);
  Report& real(std::string key, double value);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

/// Splits a report line back into its fields.
std::vector<std::pair<std::string, std::string>> parse_report(std::string_view line);

}  // namespace aconvex
