#ifndef ACONVEX_ACONVEX_H
#define ACONVEX_ACONVEX_H

/* C interface to the aconvex library. Every function returns a status code;
 * on failure the thread-local aconvex_last_error() holds a one-line detail.
 * Handles are opaque and owned by the caller. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ACONVEX_API __declspec(dllexport)
#else
#define ACONVEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define ACONVEX_DEFAULT_SEED 0x5eedULL

typedef enum aconvex_status {
  ACONVEX_OK = 0,
  ACONVEX_INVALID_ARGUMENT,
  ACONVEX_ZERO_VECTOR,
  ACONVEX_OPPOSITE_VECTORS,
  ACONVEX_NOT_SIMPLE,
  ACONVEX_NOT_CCW,
  ACONVEX_DEGENERATE_AREA,
  ACONVEX_STARTS_NOT_ALIGNED,
  ACONVEX_ROTATIONS_DIFFER,
  ACONVEX_ACO_PRECONDITION_VIOLATED,
  ACONVEX_TAG_MISMATCH,
  ACONVEX_GENERAL_POSITION_FAILED,
  ACONVEX_NOT_GENERAL_POSITION,
  ACONVEX_LOOP_ROTATION_TOO_NEGATIVE,
  ACONVEX_NOT_CONVEX,
  ACONVEX_POINT_INSIDE_POLYGON,
  ACONVEX_SEARCH_EXHAUSTED,
  ACONVEX_PARSE_ERROR,
  ACONVEX_INTERNAL_INCONSISTENCY,
  ACONVEX_UNKNOWN_ERROR
} aconvex_status;

typedef struct aconvex_polygon aconvex_polygon;
typedef struct aconvex_scene aconvex_scene;

typedef struct aconvex_aco_report {
  double value;
  size_t witness_start; /* first vertex of the witness arc */
  size_t witness_end;   /* last vertex, cyclic */
  size_t turn_count;    /* turns inside the arc, 0 for convex */
} aconvex_aco_report;

typedef struct aconvex_cert_report {
  double aco_k;
  double aco_l;
  int certified;
  double aco_lower_bound;
} aconvex_cert_report;

typedef struct aconvex_region {
  double apex[2];
  double ray1[2];
  double ray2[2];
  double measure;
} aconvex_region;

/* Name of a status code, e.g. "AcoPreconditionViolated". */
ACONVEX_API const char* aconvex_status_name(aconvex_status status);
ACONVEX_API const char* aconvex_last_error(void);
/* Position of the last ParseError, 0 when not applicable. */
ACONVEX_API size_t aconvex_last_error_line(void);
ACONVEX_API size_t aconvex_last_error_column(void);

/* xy holds n interleaved coordinate pairs in either orientation. */
ACONVEX_API aconvex_status aconvex_polygon_from_vertices(const double* xy, size_t n,
                                                         aconvex_polygon** out);
ACONVEX_API aconvex_status aconvex_polygon_parse(const char* text, aconvex_polygon** out);
ACONVEX_API aconvex_status aconvex_polygon_load(const char* path, aconvex_polygon** out);
ACONVEX_API aconvex_status aconvex_polygon_save(const aconvex_polygon* k, const char* path);
/* *out must be released with aconvex_string_free. */
ACONVEX_API aconvex_status aconvex_polygon_serialize(const aconvex_polygon* k, char** out);
ACONVEX_API const char* aconvex_polygon_name(const aconvex_polygon* k);
ACONVEX_API aconvex_status aconvex_polygon_set_name(aconvex_polygon* k, const char* name);
ACONVEX_API size_t aconvex_polygon_size(const aconvex_polygon* k);
/* Copies min(capacity, size) vertices into xy. */
ACONVEX_API size_t aconvex_polygon_vertices(const aconvex_polygon* k, double* xy,
                                            size_t capacity);
ACONVEX_API void aconvex_polygon_free(aconvex_polygon* k);
ACONVEX_API void aconvex_string_free(char* s);

ACONVEX_API aconvex_status aconvex_aco(const aconvex_polygon* k, aconvex_aco_report* out);
ACONVEX_API aconvex_status aconvex_certify(const aconvex_polygon* k, const aconvex_polygon* l,
                                           aconvex_cert_report* out);
/* cert and perturbed may be NULL. */
ACONVEX_API aconvex_status aconvex_minkowski_sum(const aconvex_polygon* k,
                                                 const aconvex_polygon* l, uint64_t seed,
                                                 aconvex_polygon** out,
                                                 aconvex_cert_report* cert, int* perturbed);
ACONVEX_API aconvex_status aconvex_member(const aconvex_polygon* k, const aconvex_polygon* l,
                                          double x, double y, int* out);
ACONVEX_API aconvex_status aconvex_separate(const aconvex_polygon* k, double x, double y,
                                            aconvex_region* out);
ACONVEX_API aconvex_status aconvex_reflect(const aconvex_polygon* k, aconvex_polygon** out);

ACONVEX_API aconvex_status aconvex_scene_new(aconvex_scene** out);
ACONVEX_API aconvex_status aconvex_scene_add_polygon(aconvex_scene* scene,
                                                     const aconvex_polygon* k,
                                                     const char* label);
ACONVEX_API aconvex_status aconvex_scene_add_region(aconvex_scene* scene,
                                                    const aconvex_region* region);
ACONVEX_API aconvex_status aconvex_scene_set_slope_diagrams(aconvex_scene* scene, int enabled);
/* *svg must be released with aconvex_string_free. */
ACONVEX_API aconvex_status aconvex_scene_render(const aconvex_scene* scene, char** svg);
ACONVEX_API void aconvex_scene_free(aconvex_scene* scene);

#ifdef __cplusplus
}
#endif

#endif
