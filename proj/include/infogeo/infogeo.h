/* C interface to the infogeo library.
 *
 * A session owns one parsed run configuration and the most recent output.
 * Strings returned through `const char**` stay valid until the next call on
 * the same session or until the session is destroyed. Every function that can
 * fail returns an infogeo_status; details are available from
 * infogeo_last_error(). Sessions are not thread-safe; use one per thread.
 */
#ifndef INFOGEO_INFOGEO_H
#define INFOGEO_INFOGEO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(INFOGEO_BUILDING)
#define INFOGEO_API __declspec(dllexport)
#else
#define INFOGEO_API __declspec(dllimport)
#endif
#else
#define INFOGEO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum infogeo_status {
  INFOGEO_OK = 0,
  INFOGEO_VERIFICATION_FAILED = 1, /* command ran, at least one check failed */
  INFOGEO_INVALID_CONFIG = 2,
  INFOGEO_IO_ERROR = 3,
  INFOGEO_DOMAIN_ERROR = 4, /* point outside a chart or precondition violated */
  INFOGEO_NUMERIC_ERROR = 5,
  INFOGEO_INTERNAL_ERROR = 6,
  INFOGEO_INVALID_ARGUMENT = 7 /* null pointer or bad enum value */
} infogeo_status;

typedef enum infogeo_format { INFOGEO_FORMAT_JSON = 0, INFOGEO_FORMAT_CSV = 1 } infogeo_format;

typedef struct infogeo_session infogeo_session;

INFOGEO_API const char* infogeo_version(void);
INFOGEO_API const char* infogeo_status_string(infogeo_status s);

/* Creates a session from a JSON configuration document. On failure *out is
 * set to NULL and, when err_buf is non-null, a message is copied into it. */
INFOGEO_API infogeo_status infogeo_session_create(const char* config_json, infogeo_session** out, char* err_buf,
                                                  size_t err_len);
INFOGEO_API infogeo_status infogeo_session_create_from_file(const char* path, infogeo_session** out, char* err_buf,
                                                            size_t err_len);
INFOGEO_API void infogeo_session_destroy(infogeo_session* s);

INFOGEO_API infogeo_status infogeo_set_seed(infogeo_session* s, uint64_t seed);
INFOGEO_API infogeo_status infogeo_set_format(infogeo_session* s, infogeo_format f);
/* NULL clears the output path; output is then only returned in memory. */
INFOGEO_API infogeo_status infogeo_set_output_path(infogeo_session* s, const char* path);

/* Runs the verification suite of the configured manifold. Returns
 * INFOGEO_VERIFICATION_FAILED (with the report still available) when a check
 * fails. The report is written to the output path when one is set. */
INFOGEO_API infogeo_status infogeo_verify(infogeo_session* s, const char** out, size_t* out_len);

/* Per-point batch rows of the same suite. */
INFOGEO_API infogeo_status infogeo_report(infogeo_session* s, const char** out, size_t* out_len);

/* Tensor dump at one point. point_json may be NULL to use the first
 * configured point (or the first seeded random point). */
INFOGEO_API infogeo_status infogeo_tensor(infogeo_session* s, const char* point_json, const char** out,
                                          size_t* out_len);

INFOGEO_API const char* infogeo_last_error(const infogeo_session* s);
/* Wall time of the last verify/report run in seconds. */
INFOGEO_API double infogeo_last_wall_time(const infogeo_session* s);

/* Stateless numeric entry points. Vectors are probability vectors of length n. */
INFOGEO_API infogeo_status infogeo_kl_divergence(const double* p, const double* q, size_t n, double* out);
/* Fisher-Rao metric on the P-frame, (n-1)x(n-1) row-major into out. */
INFOGEO_API infogeo_status infogeo_fisher_rao_metric(const double* p, size_t n, double* out);
/* Metric extracted from KL through the generic pipeline, (n-1)x(n-1) row-major. */
INFOGEO_API infogeo_status infogeo_extract_kl_metric(const double* p, size_t n, int richardson, double* out);

#ifdef __cplusplus
}
#endif

#endif /* INFOGEO_INFOGEO_H */
