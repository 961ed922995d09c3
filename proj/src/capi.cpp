#include "aconvex/aconvex.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "aconvex/error.hpp"
#include "aconvex/io.hpp"
#include "aconvex/minkowski.hpp"
#include "aconvex/separation.hpp"
#include "aconvex/svg.hpp"

struct aconvex_polygon {
  aconvex::Polygon polygon;
  std::string name;
};

struct aconvex_scene {
  aconvex::SvgScene scene;
};

namespace {

using aconvex::ErrorCode;

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

aconvex_status status_of(ErrorCode code) {
  return static_cast<aconvex_status>(static_cast<int>(code) + 1);
}

aconvex_status fail(aconvex_status status, std::string detail) {
  last_error = std::move(detail);
  last_line = 0;
  last_column = 0;
  return status;
}

// Error messages lead with the code name, which callers get separately.
std::string detail_of(const aconvex::Error& e) {
  const std::string what = e.what();
  const std::string prefix = std::string(aconvex::to_string(e.code())) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

// Runs body, translating exceptions into status codes.
template <class F>
aconvex_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    last_line = 0;
    last_column = 0;
    return ACONVEX_OK;
  } catch (const aconvex::ParseError& e) {
    fail(ACONVEX_PARSE_ERROR, detail_of(e));
    last_line = e.line();
    last_column = e.column();
    return ACONVEX_PARSE_ERROR;
  } catch (const aconvex::Error& e) {
    return fail(status_of(e.code()), detail_of(e));
  } catch (const std::bad_alloc&) {
    return fail(ACONVEX_UNKNOWN_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(ACONVEX_UNKNOWN_ERROR, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

aconvex_cert_report to_c(const aconvex::CertReport& r) {
  return {r.aco_k, r.aco_l, r.certified ? 1 : 0, r.aco_lower_bound};
}

aconvex_region to_c(const aconvex::AngularRegion& r) {
  return {{r.apex.x, r.apex.y}, {r.ray1_dir.x, r.ray1_dir.y}, {r.ray2_dir.x, r.ray2_dir.y},
          r.measure};
}

#define REQUIRE(cond)                                                        \
  do {                                                                       \
    if (!(cond)) return fail(ACONVEX_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* aconvex_status_name(aconvex_status status) {
  if (status == ACONVEX_OK) return "Ok";
  if (status == ACONVEX_UNKNOWN_ERROR) return "UnknownError";
  if (status < ACONVEX_OK || status > ACONVEX_UNKNOWN_ERROR) return "InvalidStatus";
  return aconvex::to_string(static_cast<ErrorCode>(static_cast<int>(status) - 1));
}

const char* aconvex_last_error(void) { return last_error.c_str(); }
size_t aconvex_last_error_line(void) { return last_line; }
size_t aconvex_last_error_column(void) { return last_column; }

aconvex_status aconvex_polygon_from_vertices(const double* xy, size_t n, aconvex_polygon** out) {
  REQUIRE(out != nullptr);
  REQUIRE(xy != nullptr || n == 0);
  return guarded([&] {
    std::vector<aconvex::Vec2> ring(n);
    for (size_t i = 0; i < n; ++i) ring[i] = {xy[2 * i], xy[2 * i + 1]};
    *out = new aconvex_polygon{aconvex::orient_ccw(std::move(ring)), {}};
  });
}

aconvex_status aconvex_polygon_parse(const char* text, aconvex_polygon** out) {
  REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] {
    auto doc = aconvex::parse_polygon(text);
    *out = new aconvex_polygon{std::move(doc.polygon), std::move(doc.name)};
  });
}

aconvex_status aconvex_polygon_load(const char* path, aconvex_polygon** out) {
  REQUIRE(path != nullptr && out != nullptr);
  return guarded([&] {
    auto doc = aconvex::load_polygon(path);
    *out = new aconvex_polygon{std::move(doc.polygon), std::move(doc.name)};
  });
}

aconvex_status aconvex_polygon_save(const aconvex_polygon* k, const char* path) {
  REQUIRE(k != nullptr && path != nullptr);
  return guarded([&] { aconvex::save_polygon(path, k->polygon, k->name); });
}

aconvex_status aconvex_polygon_serialize(const aconvex_polygon* k, char** out) {
  REQUIRE(k != nullptr && out != nullptr);
  return guarded([&] { *out = duplicate(aconvex::serialize_polygon(k->polygon, k->name)); });
}

const char* aconvex_polygon_name(const aconvex_polygon* k) {
  return k == nullptr ? "" : k->name.c_str();
}

aconvex_status aconvex_polygon_set_name(aconvex_polygon* k, const char* name) {
  REQUIRE(k != nullptr && name != nullptr);
  return guarded([&] { k->name = name; });
}

size_t aconvex_polygon_size(const aconvex_polygon* k) {
  return k == nullptr ? 0 : k->polygon.size();
}

size_t aconvex_polygon_vertices(const aconvex_polygon* k, double* xy, size_t capacity) {
  if (k == nullptr || xy == nullptr) return 0;
  const auto v = k->polygon.vertices();
  const size_t count = std::min(capacity, v.size());
  for (size_t i = 0; i < count; ++i) {
    xy[2 * i] = v[i].x;
    xy[2 * i + 1] = v[i].y;
  }
  return count;
}

void aconvex_polygon_free(aconvex_polygon* k) { delete k; }
void aconvex_string_free(char* s) { std::free(s); }

aconvex_status aconvex_aco(const aconvex_polygon* k, aconvex_aco_report* out) {
  REQUIRE(k != nullptr && out != nullptr);
  return guarded([&] {
    const aconvex::AcoReport r = aconvex::aco_polygon(k->polygon);
    *out = {r.value, r.witness_start, r.witness_end, r.turn_count(k->polygon.size(), true)};
  });
}

aconvex_status aconvex_certify(const aconvex_polygon* k, const aconvex_polygon* l,
                               aconvex_cert_report* out) {
  REQUIRE(k != nullptr && l != nullptr && out != nullptr);
  return guarded([&] { *out = to_c(aconvex::certify(k->polygon, l->polygon)); });
}

aconvex_status aconvex_minkowski_sum(const aconvex_polygon* k, const aconvex_polygon* l,
                                     uint64_t seed, aconvex_polygon** out,
                                     aconvex_cert_report* cert, int* perturbed) {
  REQUIRE(k != nullptr && l != nullptr && out != nullptr);
  return guarded([&] {
    aconvex::SumResult r = aconvex::minkowski_sum(k->polygon, l->polygon, seed);
    if (cert != nullptr) *cert = to_c(r.certificate);
    if (perturbed != nullptr) *perturbed = r.perturbed ? 1 : 0;
    *out = new aconvex_polygon{std::move(r.polygon), {}};
  });
}

aconvex_status aconvex_member(const aconvex_polygon* k, const aconvex_polygon* l, double x,
                              double y, int* out) {
  REQUIRE(k != nullptr && l != nullptr && out != nullptr);
  return guarded([&] { *out = aconvex::member(k->polygon, l->polygon, {x, y}) ? 1 : 0; });
}

aconvex_status aconvex_separate(const aconvex_polygon* k, double x, double y,
                                aconvex_region* out) {
  REQUIRE(k != nullptr && out != nullptr);
  return guarded([&] { *out = to_c(aconvex::separate(k->polygon, {x, y})); });
}

aconvex_status aconvex_reflect(const aconvex_polygon* k, aconvex_polygon** out) {
  REQUIRE(k != nullptr && out != nullptr);
  return guarded([&] {
    *out = new aconvex_polygon{aconvex::reflect(k->polygon), k->name.empty() ? "" : "-" + k->name};
  });
}

aconvex_status aconvex_scene_new(aconvex_scene** out) {
  REQUIRE(out != nullptr);
  return guarded([&] { *out = new aconvex_scene{}; });
}

aconvex_status aconvex_scene_add_polygon(aconvex_scene* scene, const aconvex_polygon* k,
                                         const char* label) {
  REQUIRE(scene != nullptr && k != nullptr);
  return guarded([&] {
    scene->scene.polygons.push_back({label != nullptr ? label : k->name, k->polygon});
  });
}

aconvex_status aconvex_scene_add_region(aconvex_scene* scene, const aconvex_region* region) {
  REQUIRE(scene != nullptr && region != nullptr);
  return guarded([&] {
    if (!(region->measure > 0.0)) {
      throw aconvex::Error(ErrorCode::InvalidArgument, "region measure must be positive");
    }
    scene->scene.regions.push_back({{region->apex[0], region->apex[1]},
                                    {region->ray1[0], region->ray1[1]},
                                    {region->ray2[0], region->ray2[1]},
                                    region->measure});
  });
}

aconvex_status aconvex_scene_set_slope_diagrams(aconvex_scene* scene, int enabled) {
  REQUIRE(scene != nullptr);
  scene->scene.slope_diagrams = enabled != 0;
  return ACONVEX_OK;
}

aconvex_status aconvex_scene_render(const aconvex_scene* scene, char** svg) {
  REQUIRE(scene != nullptr && svg != nullptr);
  return guarded([&] { *svg = duplicate(aconvex::render_svg(scene->scene)); });
}

void aconvex_scene_free(aconvex_scene* scene) { delete scene; }

}  // extern "C"
