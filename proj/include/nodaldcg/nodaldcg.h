/*
 * Copyright 2026 The nodaldcg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to nodaldcg. Graphs are opaque immutable handles; every
 * operation that builds a graph returns a new handle owned by the caller.
 * Arbitrary-precision results are returned as decimal strings allocated by
 * the library and released with ndcg_string_free.
 *
 * Every function returning ndcg_status leaves a message retrievable with
 * ndcg_last_error() on the calling thread when it fails.
 */
#ifndef NODALDCG_H
#define NODALDCG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NODALDCG_BUILDING)
#    define NDCG_API __declspec(dllexport)
#  else
#    define NDCG_API __declspec(dllimport)
#  endif
#else
#  define NDCG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ndcg_graph ndcg_graph;

typedef enum ndcg_status {
    NDCG_OK = 0,
    NDCG_ERR_INVALID_ARGUMENT = 1,
    NDCG_ERR_DISCONNECTED = 2,
    NDCG_ERR_PARSE = 3,
    NDCG_ERR_LIMIT = 4,
    NDCG_ERR_INFINITE_ORDER = 5,
    NDCG_ERR_INTERNAL = 6
} ndcg_status;

typedef enum ndcg_method {
    NDCG_METHOD_MTT = 0,
    NDCG_METHOD_DELETION_CONTRACTION = 1,
    NDCG_METHOD_ENUMERATION = 2
} ndcg_method;

NDCG_API const char* ndcg_version(void);
NDCG_API const char* ndcg_status_name(ndcg_status status);

/* Message of the last failure on this thread; "" if none. */
NDCG_API const char* ndcg_last_error(void);
/* 1-based line of the last NDCG_ERR_PARSE on this thread, 0 otherwise. */
NDCG_API size_t ndcg_last_error_line(void);

NDCG_API void ndcg_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

NDCG_API ndcg_status ndcg_graph_parse(const char* text, ndcg_graph** out);
NDCG_API ndcg_status ndcg_graph_read_file(const char* path, ndcg_graph** out);
/* endpoints holds 2 * edge_count vertex indices; genus may be NULL. Edge ids are 0..edge_count-1. */
NDCG_API ndcg_status ndcg_graph_from_edges(size_t vertex_count, const size_t* endpoints,
                                           size_t edge_count, const unsigned* genus,
                                           ndcg_graph** out);
NDCG_API void ndcg_graph_free(ndcg_graph* g);

NDCG_API ndcg_status ndcg_graph_format(const ndcg_graph* g, char** out);
NDCG_API size_t ndcg_graph_vertex_count(const ndcg_graph* g);
NDCG_API size_t ndcg_graph_edge_count(const ndcg_graph* g);
NDCG_API size_t ndcg_graph_loop_count(const ndcg_graph* g);
/* Edge at storage position `position` (0 <= position < edge_count). */
NDCG_API ndcg_status ndcg_graph_edge(const ndcg_graph* g, size_t position, uint64_t* id, size_t* u,
                                     size_t* v);
NDCG_API unsigned ndcg_graph_genus(const ndcg_graph* g, size_t vertex);
NDCG_API int ndcg_graph_is_connected(const ndcg_graph* g);
NDCG_API ndcg_status ndcg_graph_first_betti(const ndcg_graph* g, long long* out);
NDCG_API ndcg_status ndcg_graph_arithmetic_genus(const ndcg_graph* g, long long* out);
NDCG_API ndcg_status ndcg_graph_is_stable(const ndcg_graph* g, int* out);

/* ---- curve operations -------------------------------------------------- */

NDCG_API ndcg_status ndcg_loopless_reduction(const ndcg_graph* g, ndcg_graph** out);
NDCG_API ndcg_status ndcg_normalise(const ndcg_graph* g, uint64_t edge, ndcg_graph** out);
NDCG_API ndcg_status ndcg_smooth(const ndcg_graph* g, uint64_t edge, ndcg_graph** out);
NDCG_API ndcg_status ndcg_wedge_sum(const ndcg_graph* g1, const ndcg_graph* g2, size_t v1, size_t v2,
                                    ndcg_graph** out);
NDCG_API ndcg_status ndcg_blow_up(const ndcg_graph* g, uint64_t edge, unsigned times,
                                  ndcg_graph** out);
/* k_e = times[i] for edge ids[i]; edges not listed are left alone. */
NDCG_API ndcg_status ndcg_multi_blow_up(const ndcg_graph* g, const uint64_t* ids,
                                        const unsigned* times, size_t count, ndcg_graph** out);
/* Subset-sum blow-up formula; NDCG_ERR_INVALID_ARGUMENT when the support holds a loop. */
NDCG_API ndcg_status ndcg_blow_up_formula(const ndcg_graph* g, const uint64_t* ids,
                                          const unsigned* times, size_t count, char** out);

/* ---- invariants -------------------------------------------------------- */

/* enumeration_limit is used by NDCG_METHOD_ENUMERATION only; 0 selects the default (24). */
NDCG_API ndcg_status ndcg_complexity(const ndcg_graph* g, ndcg_method method,
                                     size_t enumeration_limit, char** out);
/* "Z/d1 x Z/d2 x ..." or "trivial"; factor_count (nullable) receives the number of factors. */
NDCG_API ndcg_status ndcg_degree_class_group(const ndcg_graph* g, char** out, size_t* factor_count);

/* ---- families ---------------------------------------------------------- */

NDCG_API ndcg_status ndcg_banana_graph(unsigned k, ndcg_graph** out);
NDCG_API ndcg_status ndcg_cycle_graph(unsigned k, ndcg_graph** out);
NDCG_API ndcg_status ndcg_chain_of_cycles(const unsigned* k, const unsigned* h, size_t n,
                                          ndcg_graph** out);
NDCG_API ndcg_status ndcg_cs_complexity(const unsigned* k, size_t n, char** out);
/* Rendered polynomial, e.g. "k^3 - 2k". */
NDCG_API ndcg_status ndcg_cs_polynomial(unsigned n, char** out);

NDCG_API ndcg_status ndcg_vine_graph(const unsigned long* m, size_t n, ndcg_graph** out);
NDCG_API ndcg_status ndcg_vine_complexity(const unsigned long* m, size_t n, char** out);
NDCG_API ndcg_status ndcg_vine_structure(const unsigned long* m, size_t n, char** out);
NDCG_API ndcg_status ndcg_dollar_structure(const unsigned long* m, size_t n, char** out);
/* k is 0-based in the non-increasing order of m. */
NDCG_API ndcg_status ndcg_vine_generator_order(const unsigned long* m, size_t n, size_t k, char** out);
NDCG_API ndcg_status ndcg_vine_cyclic_by_tk(const unsigned long* m, size_t n, size_t k, int* out);

/* ---- catalog ----------------------------------------------------------- */

/*
 * Verifies the genus-2 and genus-3 tables. `corrupt_label`, when non-NULL,
 * bumps that entry's expected complexity by one (a self-test of the checker).
 * `report` receives one "label status expected got" line per entry.
 */
NDCG_API ndcg_status ndcg_catalog_verify(const char* corrupt_label, char** report, size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* NODALDCG_H */
