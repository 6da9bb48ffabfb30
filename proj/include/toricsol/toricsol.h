#ifndef TORICSOL_H
#define TORICSOL_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(TORICSOL_BUILDING)
#define TORICSOL_API __declspec(dllexport)
#else
#define TORICSOL_API __declspec(dllimport)
#endif
#else
#define TORICSOL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes, identical to the CLI exit codes. */
typedef enum {
    TORICSOL_OK = 0,
    TORICSOL_INTERNAL = 1,
    TORICSOL_INPUT = 2,
    TORICSOL_SOLVER = 3,
    TORICSOL_VERIFICATION = 4
} toricsol_status;

typedef enum { TORICSOL_FORMAT_TEXT = 0, TORICSOL_FORMAT_JSON = 1 } toricsol_format;

typedef enum { TORICSOL_POTENTIAL_GUILLEMIN = 0, TORICSOL_POTENTIAL_CALABI = 1 } toricsol_potential;

typedef struct toricsol_polytope toricsol_polytope;

typedef struct {
    double tol;
    int grid;
    double margin;
    int order;
    int max_iterations;
    toricsol_potential potential;
    toricsol_format format;
} toricsol_options;

typedef struct {
    double alpha1, alpha2, beta1, beta2;
    double c_alpha1, c_alpha2, c_beta1, c_beta2;
    double bracket_lo, bracket_hi;
} toricsol_calabi_params;

TORICSOL_API const char* toricsol_version(void);
TORICSOL_API toricsol_options toricsol_default_options(void);
/* Blow-up record and the default bracket. */
TORICSOL_API toricsol_calabi_params toricsol_default_calabi_params(void);

/* Message of the last failure on this thread, or "" . */
TORICSOL_API const char* toricsol_last_error(void);

TORICSOL_API toricsol_status toricsol_polytope_from_json(const char* document, toricsol_polytope** out);
TORICSOL_API toricsol_status toricsol_polytope_from_file(const char* path, toricsol_polytope** out);
TORICSOL_API void toricsol_polytope_free(toricsol_polytope* p);
TORICSOL_API int toricsol_polytope_dim(const toricsol_polytope* p);
TORICSOL_API int toricsol_polytope_facet_count(const toricsol_polytope* p);

/* Each command writes a malloc'd report to *report (release with
   toricsol_string_free). The report is produced on failure as well. */
TORICSOL_API toricsol_status toricsol_roots(const toricsol_polytope* p, const toricsol_options* o, char** report);
TORICSOL_API toricsol_status toricsol_soliton(const toricsol_polytope* p, const toricsol_options* o, char** report);
TORICSOL_API toricsol_status toricsol_verify(const toricsol_polytope* p, const toricsol_options* o, char** report);
TORICSOL_API toricsol_status toricsol_decompose(const toricsol_polytope* p, const toricsol_options* o, char** report);
TORICSOL_API toricsol_status toricsol_calabi(const toricsol_calabi_params* params, const toricsol_options* o,
                                             char** report);

TORICSOL_API void toricsol_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
