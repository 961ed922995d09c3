// aconvex command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aconvex/aconvex.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

enum Exit { kOk = 0, kUsage = 1, kPrecondition = 2, kParse = 3, kInternal = 4 };

int exit_code(aconvex_status s) {
  switch (s) {
    case ACONVEX_OK:
      return kOk;
    case ACONVEX_PARSE_ERROR:
      return kParse;
    case ACONVEX_INTERNAL_INCONSISTENCY:
    case ACONVEX_GENERAL_POSITION_FAILED:
    case ACONVEX_SEARCH_EXHAUSTED:
    case ACONVEX_UNKNOWN_ERROR:
      return kInternal;
    default:
      return kPrecondition;
  }
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

// Failure carrying the status plus the thread's error detail at the throw site.
struct Failure {
  aconvex_status status;
  std::string detail;
  std::size_t line = 0;
  std::size_t column = 0;
  std::string source;

  std::string str() const {
    std::string s = std::string("error=") + aconvex_status_name(status) +
                    " exit=" + std::to_string(exit_code(status));
    if (!source.empty()) s += " file=" + quoted(source);
    if (status == ACONVEX_PARSE_ERROR) {
      s += " line=" + std::to_string(line) + " column=" + std::to_string(column);
    }
    return s + " detail=" + quoted(detail);
  }
};

void check(aconvex_status s, const std::string& source = "") {
  if (s != ACONVEX_OK) {
    throw Failure{s, aconvex_last_error(), aconvex_last_error_line(), aconvex_last_error_column(),
                  source};
  }
}

struct PolygonDeleter {
  void operator()(aconvex_polygon* p) const { aconvex_polygon_free(p); }
};
using PolygonPtr = std::unique_ptr<aconvex_polygon, PolygonDeleter>;

struct SceneDeleter {
  void operator()(aconvex_scene* s) const { aconvex_scene_free(s); }
};

struct StringDeleter {
  void operator()(char* s) const { aconvex_string_free(s); }
};

PolygonPtr load(const std::string& path) {
  aconvex_polygon* p = nullptr;
  check(aconvex_polygon_load(path.c_str(), &p), path);
  return PolygonPtr(p);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class Line {
 public:
  explicit Line(bool degrees) : degrees_(degrees) {}

  Line& add(const std::string& key, const std::string& value) {
    if (!text_.empty()) text_ += ' ';
    text_ += key + '=' + value;
    return *this;
  }
  Line& real(const std::string& key, double v) { return add(key, num(v)); }
  Line& flag(const std::string& key, bool v) { return add(key, v ? "true" : "false"); }
  Line& count(const std::string& key, std::size_t v) { return add(key, std::to_string(v)); }
  Line& angle(const std::string& key, double rad) {
    return degrees_ ? add(key + "_deg", num(rad * 180.0 / kPi)) : add(key, num(rad));
  }
  const std::string& str() const { return text_; }

 private:
  bool degrees_;
  std::string text_;
};

std::string display_name(const aconvex_polygon* p, const std::string& path) {
  const std::string name = aconvex_polygon_name(p);
  return name.empty() ? path : name;
}

std::string aco_line(const std::string& path, bool degrees) {
  PolygonPtr k = load(path);
  aconvex_aco_report r{};
  check(aconvex_aco(k.get(), &r), path);
  Line line(degrees);
  line.add("name", display_name(k.get(), path))
      .count("vertices", aconvex_polygon_size(k.get()))
      .angle("aco", r.value)
      .count("witness_start", r.witness_start)
      .count("witness_end", r.witness_end)
      .count("witness_turns", r.turn_count)
      .flag("convex", r.turn_count == 0);
  return line.str();
}

void cert_fields(Line& line, const aconvex_cert_report& c) {
  line.flag("certified", c.certified != 0)
      .angle("aco_k", c.aco_k)
      .angle("aco_l", c.aco_l)
      .angle("bound", c.aco_lower_bound);
}

std::vector<std::string> read_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{ACONVEX_INVALID_ARGUMENT, "cannot open list " + path, 0, 0, path};
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ACONVEX_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (end != nullptr && *end == '\0') return v;
    throw Failure{ACONVEX_INVALID_ARGUMENT, std::string("ACONVEX_SEED is not an integer: ") + env, 0, 0, ""};
  }
  return ACONVEX_DEFAULT_SEED;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Angular convexity, Minkowski sums and separation witnesses for simple polygons"};
  app.require_subcommand(1);
  bool degrees = false;
  std::optional<std::uint64_t> seed_flag;
  app.add_flag("--degrees", degrees, "Print angles in degrees (keys gain a _deg suffix)");
  app.add_option("--seed", seed_flag, "Seed for randomized steps (default: $ACONVEX_SEED or 0x5eed)");

  std::string file_a, file_b, out_path, list_path;
  double px = 0.0, py = 0.0;

  auto* aco = app.add_subcommand("aco", "Angular convexity and its witness arc");
  aco->add_option("file", file_a, "Polygon document");
  aco->add_option("--batch", list_path, "File listing one polygon document per line");

  auto* sum = app.add_subcommand("sum", "Certified Minkowski sum A + B");
  sum->add_option("a", file_a)->required();
  sum->add_option("b", file_b)->required();
  sum->add_option("-o,--output", out_path, "Output polygon document")->required();

  auto* cert = app.add_subcommand("certify", "Hole-freeness certificate for A + B");
  cert->add_option("a", file_a)->required();
  cert->add_option("b", file_b)->required();

  auto* mem = app.add_subcommand("member", "Whether (X, Y) lies in A + B");
  mem->add_option("a", file_a)->required();
  mem->add_option("b", file_b)->required();
  mem->add_option("x", px)->required();
  mem->add_option("y", py)->required();

  auto* sep = app.add_subcommand("separate", "Angular region separating (X, Y) from A");
  sep->add_option("a", file_a)->required();
  sep->add_option("x", px)->required();
  sep->add_option("y", py)->required();

  std::vector<std::string> render_files;
  std::vector<double> witness_points;
  bool no_slope = false;
  auto* render = app.add_subcommand("render", "Draw polygons, witness regions and slope diagrams");
  render->add_option("files", render_files)->required();
  render->add_option("-o,--output", out_path, "SVG output")->required();
  render->add_option("--witness", witness_points,
                     "Exterior point X Y of the first polygon to separate; repeatable")
      ->expected(2)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  render->add_flag("--no-slope", no_slope, "Omit slope diagrams");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (aco->parsed()) {
      if (file_a.empty() == list_path.empty()) {
        std::cerr << "error=Usage exit=1 detail=\"aco takes either FILE or --batch LIST\"\n";
        return kUsage;
      }
      if (!list_path.empty()) {
        // Files are independent; results are printed in list order.
        const std::vector<std::string> files = read_list(list_path);
        std::vector<std::future<std::string>> jobs;
        for (const std::string& f : files) {
          jobs.push_back(std::async(std::launch::async, [f, degrees] {
            try {
              return aco_line(f, degrees);
            } catch (const Failure& fail) {
              return fail.str();
            }
          }));
        }
        int worst = kOk;
        for (std::size_t i = 0; i < jobs.size(); ++i) {
          const std::string line = jobs[i].get();
          if (line.rfind("error=", 0) == 0) {
            std::cerr << line << '\n';
            // Exit with the first failure's code.
            if (worst == kOk) worst = std::stoi(line.substr(line.find("exit=") + 5));
          } else {
            std::cout << line << '\n';
          }
        }
        return worst;
      }
      std::cout << aco_line(file_a, degrees) << '\n';
      return kOk;
    }

    if (sum->parsed()) {
      const std::uint64_t seed = resolve_seed(seed_flag);
      PolygonPtr k = load(file_a);
      PolygonPtr l = load(file_b);
      aconvex_polygon* raw = nullptr;
      aconvex_cert_report c{};
      int perturbed = 0;
      check(aconvex_minkowski_sum(k.get(), l.get(), seed, &raw, &c, &perturbed));
      PolygonPtr s(raw);
      const std::string name = display_name(k.get(), file_a) + "+" + display_name(l.get(), file_b);
      check(aconvex_polygon_set_name(s.get(), name.c_str()));
      check(aconvex_polygon_save(s.get(), out_path.c_str()), out_path);
      Line line(degrees);
      cert_fields(line, c);
      line.count("vertices", aconvex_polygon_size(s.get()))
          .flag("perturbed", perturbed != 0)
          .add("seed", std::to_string(seed))
          .add("output", out_path);
      std::cout << line.str() << '\n';
      return kOk;
    }

    if (cert->parsed()) {
      PolygonPtr k = load(file_a);
      PolygonPtr l = load(file_b);
      aconvex_cert_report c{};
      check(aconvex_certify(k.get(), l.get(), &c));
      Line line(degrees);
      cert_fields(line, c);
      std::cout << line.str() << '\n';
      return kOk;
    }

    if (mem->parsed()) {
      PolygonPtr k = load(file_a);
      PolygonPtr l = load(file_b);
      int inside = 0;
      check(aconvex_member(k.get(), l.get(), px, py, &inside));
      std::cout << Line(degrees).real("x", px).real("y", py).flag("member", inside != 0).str()
                << '\n';
      return kOk;
    }

    if (sep->parsed()) {
      PolygonPtr k = load(file_a);
      aconvex_region r{};
      check(aconvex_separate(k.get(), px, py, &r));
      Line line(degrees);
      line.real("apex_x", r.apex[0])
          .real("apex_y", r.apex[1])
          .real("ray1_x", r.ray1[0])
          .real("ray1_y", r.ray1[1])
          .real("ray2_x", r.ray2[0])
          .real("ray2_y", r.ray2[1])
          .angle("measure", r.measure);
      std::cout << line.str() << '\n';
      return kOk;
    }

    if (render->parsed()) {
      aconvex_scene* raw = nullptr;
      check(aconvex_scene_new(&raw));
      std::unique_ptr<aconvex_scene, SceneDeleter> scene(raw);
      std::vector<PolygonPtr> polygons;
      for (const std::string& f : render_files) {
        polygons.push_back(load(f));
        const std::string label = display_name(polygons.back().get(), f);
        check(aconvex_scene_add_polygon(scene.get(), polygons.back().get(), label.c_str()));
      }
      for (std::size_t i = 0; i + 1 < witness_points.size(); i += 2) {
        aconvex_region r{};
        check(aconvex_separate(polygons.front().get(), witness_points[i], witness_points[i + 1],
                               &r));
        check(aconvex_scene_add_region(scene.get(), &r));
      }
      check(aconvex_scene_set_slope_diagrams(scene.get(), no_slope ? 0 : 1));
      char* svg_raw = nullptr;
      check(aconvex_scene_render(scene.get(), &svg_raw));
      std::unique_ptr<char, StringDeleter> svg(svg_raw);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw Failure{ACONVEX_INVALID_ARGUMENT, "cannot write " + out_path, 0, 0, out_path};
      out << svg.get();
      std::cout << Line(degrees)
                       .count("polygons", polygons.size())
                       .count("regions", witness_points.size() / 2)
                       .add("output", out_path)
                       .str()
                << '\n';
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << f.str() << '\n';
    return exit_code(f.status);
  }
  return kUsage;
}
