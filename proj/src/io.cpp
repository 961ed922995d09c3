#include "aconvex/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aconvex/error.hpp"

namespace aconvex {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Schema errors have no parser position; point at the key that holds the
// offending value, or at the start of the document.
[[noreturn]] void schema_error(std::string_view text, std::string_view key,
                               const std::string& detail) {
  const std::size_t at = text.find("\"" + std::string(key) + "\"");
  const auto [line, column] = line_column(text, at == std::string_view::npos ? 0 : at);
  throw ParseError(line, column, detail);
}

}  // namespace

PolygonDocument parse_polygon(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = line_column(text, offset);
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(line, column, what);
  }
  if (!doc.is_object()) schema_error(text, "", "document must be an object");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) schema_error(text, "name", "\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    schema_error(text, "vertices", "\"vertices\" must be an array of [x, y] pairs");
  }
  std::vector<Vec2> vertices;
  for (const json& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      schema_error(text, "vertices",
                   "vertex " + std::to_string(vertices.size()) + " is not an [x, y] pair");
    }
    vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    if (!vertices.back().finite()) schema_error(text, "vertices", "non-finite coordinate");
  }
  if (vertices.size() > 1 && vertices.front() == vertices.back()) vertices.pop_back();
  if (vertices.size() < 3) {
    schema_error(text, "vertices",
                 "a polygon needs at least 3 vertices, got " + std::to_string(vertices.size()));
  }
  return PolygonDocument{std::move(name), orient_ccw(std::move(vertices))};
}

std::string serialize_polygon(const Polygon& k, std::string_view name) {
  std::ostringstream out;
  out << "{\n  \"name\": " << json(std::string(name)).dump() << ",\n  \"vertices\": [\n";
  const auto v = k.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    out << "    [" << json(v[i].x).dump() << ", " << json(v[i].y).dump() << "]"
        << (i + 1 < v.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

PolygonDocument load_polygon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polygon(buf.str());
}

void save_polygon(const std::string& path, const Polygon& k, std::string_view name) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << serialize_polygon(k, name);
}

std::string format_angle(double radians) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", radians);
  return buf;
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Report& Report::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Report& Report::add(std::string key, bool value) {
  return add(std::move(key), std::string(value ? "true" : "false"));
}

Report& Report::add(std::string key, std::size_t value) {
  return add(std::move(key), std::to_string(value));
}

Report& Report::angle(std::string key, double radians, bool degrees) {
  if (degrees) return add(std::move(key) + "_deg", format_real(radians * 180.0 / kPi));
  return add(std::move(key), format_angle(radians));
}

Report& Report::real(std::string key, double value) {
  return add(std::move(key), format_real(value));
}

std::string Report::str() const {
  std::string line;
  for (const auto& [key, value] : fields_) {
    if (!line.empty()) line += ' ';
    line += key + '=' + value;
  }
  return line;
}

std::vector<std::pair<std::string, std::string>> parse_report(std::string_view line) {
  std::vector<std::pair<std::string, std::string>> fields;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    fields.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  return fields;
}

}  // namespace aconvex
