#ifndef QALG_H
#define QALG_H

#include <stddef.h>

#if defined(QALG_BUILDING)
#define QALG_API __attribute__((visibility("default")))
#else
#define QALG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qalg_status {
    QALG_OK = 0,
    QALG_CLAIM_FAILED = 1,  /* a verification ran and some claim does not hold */
    QALG_USAGE = 2,         /* bad argument */
    QALG_PARSE = 3,         /* malformed presentation or complex text */
    QALG_INCOMPLETE = 4,    /* Groebner basis not complete in a required degree */
    QALG_INTERNAL = 5
} qalg_status;

typedef enum qalg_format { QALG_JSON = 0, QALG_TEXT = 1, QALG_CSV = 2 } qalg_format;

typedef struct qalg_algebra qalg_algebra;

QALG_API const char* qalg_version(void);

/* Message for the last non-OK status on this thread; empty when none. */
QALG_API const char* qalg_last_error(void);

/* Strings returned through char** out are owned by the caller. */
QALG_API void qalg_string_free(char* s);

/* field may be NULL (keep the presentation's field), "q" or "p:<prime>". */
QALG_API qalg_status qalg_algebra_parse(const char* text, const char* field, qalg_algebra** out);
/* family "C" (m >= 5), "B" or "B11" (m ignored). */
QALG_API qalg_status qalg_algebra_family(const char* family, int m, const char* field, qalg_algebra** out);
/* Free algebra on n generators x1..xn. */
QALG_API qalg_status qalg_algebra_free(int n, const char* field, qalg_algebra** out);
QALG_API void qalg_algebra_destroy(qalg_algebra* a);

QALG_API size_t qalg_num_generators(const qalg_algebra* a);
QALG_API size_t qalg_num_relations(const qalg_algebra* a);
QALG_API qalg_status qalg_presentation_text(const qalg_algebra* a, char** out);

/* Groebner basis: QALG_TEXT gives the basis in presentation syntax, QALG_JSON the sidecar. */
QALG_API qalg_status qalg_gb(const qalg_algebra* a, int maxdeg, qalg_format fmt, char** out);
QALG_API qalg_status qalg_hilbert(const qalg_algebra* a, int maxdeg, qalg_format fmt, char** out);
/* dims[0..maxdeg] */
QALG_API qalg_status qalg_hilbert_dims(const qalg_algebra* a, int maxdeg, long long* dims);
QALG_API qalg_status qalg_resolve(const qalg_algebra* a, int imax, int jmax, qalg_format fmt, char** out);
/* table[i * (jmax + 1) + j] = b(i, j) */
QALG_API qalg_status qalg_betti(const qalg_algebra* a, int imax, int jmax, long long* table);
/* Complex in the .maps format. augmented != 0: a resolution of k (position 0 included). */
QALG_API qalg_status qalg_verify_complex(const qalg_algebra* a, const char* maps_text, int jmax, int augmented, qalg_format fmt,
                                char** out);
QALG_API qalg_status qalg_ext_gens(const qalg_algebra* a, int imax, int jmax, qalg_format fmt, char** out);

/* The built-in complex of a family ("C" with m, or "B"/"B11") in the .maps format. */
QALG_API qalg_status qalg_make_complex(const char* family, int m, char** out);

/* Runs every check for C(m), m in ms, and for B (b_variant 0) or B11 (b_variant 1).
   Returns QALG_CLAIM_FAILED when some claim fails; the report is written either way. */
QALG_API qalg_status qalg_paper_check(const int* ms, size_t n, int b_variant, const char* field, qalg_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
