/*
   Copyright 2026 The ellf2 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface of libellf2. Every function returning ellf2_status leaves a
   message for ellf2_last_error() on failure; the message is per thread and
   valid until the next failing call on that thread. Strings returned through
   char** are owned by the caller and released with ellf2_string_free. */

#ifndef ELLF2_H
#define ELLF2_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ELLF2_BUILDING)
#define ELLF2_API __declspec(dllexport)
#else
#define ELLF2_API __declspec(dllimport)
#endif
#else
#define ELLF2_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define ELLF2_VERSION_STRING "1.0.0"
#define ELLF2_SPACE_SIZE 2097152u

typedef enum ellf2_status {
    ELLF2_OK = 0,
    ELLF2_INVALID_ARGUMENT = 1,
    ELLF2_PARSE = 2,
    ELLF2_SINGULAR = 3,
    ELLF2_IO = 4,
    ELLF2_NOT_EMBEDDED = 5,
    ELLF2_INTERNAL = 6
} ellf2_status;

typedef struct ellf2_equation ellf2_equation;
typedef struct ellf2_classification ellf2_classification;
typedef struct ellf2_graph ellf2_graph;

ELLF2_API const char* ellf2_version(void);
ELLF2_API const char* ellf2_status_name(ellf2_status status);
/* Empty string if no call has failed on this thread. */
ELLF2_API const char* ellf2_last_error(void);
ELLF2_API void ellf2_string_free(char* s);

/* Equations y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_2[t], deg ai <= i. */
ELLF2_API ellf2_status ellf2_equation_parse(const char* text, ellf2_equation** out);
ELLF2_API ellf2_status ellf2_equation_from_code(uint32_t code, ellf2_equation** out);
ELLF2_API void ellf2_equation_free(ellf2_equation* e);
ELLF2_API ellf2_status ellf2_equation_code(const ellf2_equation* e, uint32_t* out);
ELLF2_API ellf2_status ellf2_equation_canonical_code(const ellf2_equation* e, uint32_t* out);
ELLF2_API ellf2_status ellf2_equation_text(const ellf2_equation* e, char** out);
ELLF2_API ellf2_status ellf2_equation_discriminant(const ellf2_equation* e, char** out);
/* ELLF2_SINGULAR if the discriminant vanishes. */
ELLF2_API ellf2_status ellf2_equation_j_invariant(const ellf2_equation* e, char** out);
/* "I1*+E4+I4": fibers over t = 0, 1, infinity. ELLF2_SINGULAR if the discriminant vanishes. */
ELLF2_API ellf2_status ellf2_equation_fibers(const ellf2_equation* e, char** out);
/* Bit i set iff filter i failed, in the order nonzero_discriminant,
   globally_minimal, no_I0star, nonrational_fibers_small, at_most_one_ss,
   sum_points_25, galois_trivial_components. */
ELLF2_API ellf2_status ellf2_equation_filter_mask(const ellf2_equation* e, uint8_t* out);

/* Full JSON report for one equation; a vanishing discriminant is reported, not an error. */
ELLF2_API ellf2_status ellf2_analyze(const char* text, char** json_out);

typedef struct ellf2_search_options {
    unsigned worker_count;
    /* Optional paths, NULL or "" to skip. */
    const char* output_path;
    const char* csv_path;
    const char* cache_path;
    int emit_trace;
} ellf2_search_options;

ELLF2_API void ellf2_search_options_init(ellf2_search_options* options);
ELLF2_API ellf2_status ellf2_classify(const ellf2_search_options* options, ellf2_classification** out);
ELLF2_API void ellf2_classification_free(ellf2_classification* c);
ELLF2_API ellf2_status ellf2_classification_survivor_count(const ellf2_classification* c, uint32_t* out);
ELLF2_API ellf2_status ellf2_classification_class_count(const ellf2_classification* c, size_t* out);
ELLF2_API ellf2_status ellf2_classification_class_code(const ellf2_classification* c, size_t index, uint32_t* out);
ELLF2_API ellf2_status ellf2_classification_json(const ellf2_classification* c, char** out);
ELLF2_API ellf2_status ellf2_classification_csv(const ellf2_classification* c, char** out);
/* *bijection is 1 iff classes and tabulated rows correspond one to one. */
ELLF2_API ellf2_status ellf2_classification_golden_check(const ellf2_classification* c, int* bijection,
                                                         char** report_text);

/* {"vertices": [...], "edges": [[u, v, label], ...]} */
ELLF2_API ellf2_status ellf2_graph_from_json(const char* json, ellf2_graph** out);
ELLF2_API void ellf2_graph_free(ellf2_graph* g);
ELLF2_API ellf2_status ellf2_graph_det(const ellf2_graph* g, int64_t* out);
/* JSON array of {symbol, vertices, multiplicity}. */
ELLF2_API ellf2_status ellf2_graph_canonical(const ellf2_graph* g, char** json_out);

/* target "p/q", fibers "IV,I1*", torsion_order 0 for none. JSON array of
   {po, contributions}. */
ELLF2_API ellf2_status ellf2_height_solve(const char* target, const char* fibers, int po_max, int torsion_order,
                                          char** json_out);
/* ELLF2_NOT_EMBEDDED if the lattice is not in the table. */
ELLF2_API ellf2_status ellf2_mw_lookup(const char* trivial_lattice, char** mw_out);

#ifdef __cplusplus
}
#endif

#endif /* ELLF2_H */
