/* C interface to the curvelab library.
 *
 * Every call returns a curvelab_status. Results are JSON documents returned
 * through a char** out-parameter, owned by the caller and released with
 * curvelab_free_string. After a failing call curvelab_last_error() describes
 * the failure for the calling thread.
 */
#ifndef CURVELAB_CURVELAB_H
#define CURVELAB_CURVELAB_H

#include <stdint.h>

#if defined(_WIN32)
#  define CURVELAB_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define CURVELAB_API __attribute__((visibility("default")))
#else
#  define CURVELAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum curvelab_status {
  CURVELAB_OK = 0,
  CURVELAB_E_USAGE = 1,        /* malformed or out-of-domain input */
  CURVELAB_E_REFUSED = 2,      /* gcd>1, max-coordinate fails, not Bresinsky form, failed condition */
  CURVELAB_E_INCONSISTENT = 3, /* criterion/oracle disagreement or ambiguous parameter recovery */
  CURVELAB_E_OVERFLOW = 4,
  CURVELAB_E_LIMIT = 5,        /* reduction step bound or parameter search cap */
  CURVELAB_E_INTERNAL = 6
} curvelab_status;

typedef struct curvelab_options {
  int64_t step_bound;      /* reduction steps per normal form */
  int64_t d_cap;           /* cap on d1..d4 during parameter recovery */
  int include_homogeneous; /* attach the homogeneous basis to ACM reports */
  unsigned threads;        /* range-scan workers, 0 = hardware concurrency */
} curvelab_options;

enum {
  CURVELAB_BASIS_HOMOGENIZE = 1, /* print the basis of the homogenized ideal */
  CURVELAB_BASIS_ORACLE = 2      /* use the Buchberger result instead of the closed form */
};

/* A shifted family a + m v of Gorenstein non-complete-intersection curves. */
typedef struct curvelab_family curvelab_family;

CURVELAB_API const char* curvelab_version(void);
CURVELAB_API const char* curvelab_last_error(void);
CURVELAB_API void curvelab_options_init(curvelab_options* opts);
CURVELAB_API void curvelab_free_string(char* s);

/* From eight parameters in the order d21,d41,d32,d42,d13,d23,d14,d34. */
CURVELAB_API curvelab_status curvelab_family_from_params(const int64_t params[8], curvelab_family** out);

/* From base degrees; the parameters are recovered, permuting coordinates when
 * the fourth entry is not the strict maximum. */
CURVELAB_API curvelab_status curvelab_family_from_degrees(const int64_t degrees[4], const curvelab_options* opts,
                                                          curvelab_family** out);

CURVELAB_API void curvelab_family_free(curvelab_family* family);

/* {"data", "base", "shift", "permutation", "generators", ...} */
CURVELAB_API curvelab_status curvelab_family_describe(const curvelab_family* family, char** json);

/* Report for one member. *json is also set when the status is REFUSED
 * (report not applicable) or INCONSISTENT (verdicts disagree). */
CURVELAB_API curvelab_status curvelab_analyze(const curvelab_family* family, int64_t m,
                                              const curvelab_options* opts, char** json);

/* {"reports": [...], "summary": {...}} for m_lo..m_hi. INCONSISTENT (with
 * *json set) when any member disagrees. */
CURVELAB_API curvelab_status curvelab_scan(const curvelab_family* family, int64_t m_lo, int64_t m_hi,
                                           const curvelab_options* opts, char** json);

/* Gröbner basis of member m; flags combine CURVELAB_BASIS_* values. */
CURVELAB_API curvelab_status curvelab_basis(const curvelab_family* family, int64_t m, int flags,
                                            const curvelab_options* opts, char** json);

/* Parameter recovery listing for one degree vector. */
CURVELAB_API curvelab_status curvelab_recover(const int64_t degrees[4], const curvelab_options* opts, char** json);

#ifdef __cplusplus
}
#endif

#endif /* CURVELAB_CURVELAB_H */
