/*
Copyright 2026 the hoct authors

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

/* C API of the higher-order clusterability tester. Opaque handles plus
 * error codes; every string returned through a char** is heap-allocated and
 * must be released with hoct_string_free. Functions returning hoct_status
 * leave a descriptive message retrievable via hoct_last_error() on failure.
 */
#ifndef HOCT_H
#define HOCT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hoct_status {
  HOCT_OK = 0,
  HOCT_ERR_INVALID_ARGUMENT = 1,
  HOCT_ERR_IO = 2,
  HOCT_ERR_CAP_EXCEEDED = 3,
  HOCT_ERR_OVERFLOW = 4,
  HOCT_ERR_INTERNAL = 5
} hoct_status;

const char* hoct_status_name(hoct_status s);

/* Thread-local message describing the most recent failure. */
const char* hoct_last_error(void);

const char* hoct_version(void);

/* --- graphs -------------------------------------------------------------- */

typedef struct hoct_graph hoct_graph;

/* Edge-list wire format: one "u v" per line, 0-based decimal ids,
 * undirected, '#' comments ignored. n_override < 0 means max id + 1. */
hoct_status hoct_graph_load_file(const char* path, long long n_override,
                                 hoct_graph** out);
hoct_status hoct_graph_from_text(const char* text, long long n_override,
                                 hoct_graph** out);
hoct_status hoct_graph_save_file(const hoct_graph* g, const char* path);
void hoct_graph_free(hoct_graph* g);

long long hoct_graph_vertex_count(const hoct_graph* g);
long long hoct_graph_edge_count(const hoct_graph* g);
long long hoct_graph_max_degree(const hoct_graph* g);

/* Neighbor oracle: 1-based index i; *out = -1 when i exceeds deg(v).
 * Out-of-range v is an error, distinct from the NULL result. */
hoct_status hoct_graph_neighbor(const hoct_graph* g, long long v, long long i,
                                long long* out);
hoct_status hoct_graph_degree(const hoct_graph* g, long long v,
                              long long* out);

/* --- instance generators -------------------------------------------------- */

/* intra_model: "tri_regular" or "clique_chain". */
hoct_status hoct_gen_clusterable(long long n, long long k,
                                 const char* intra_model,
                                 long long cross_edges,
                                 unsigned long long seed, hoct_graph** out);
/* model: "extra_components" or "shattered". */
hoct_status hoct_gen_far(long long n, long long k, const char* model,
                         unsigned long long seed, hoct_graph** out);

/* --- tester ---------------------------------------------------------------- */

typedef struct hoct_test_options {
  long long k;
  double eps;
  double psi;
  int practical;        /* 0 = paper-mode parameters, 1 = practical scaling */
  double scale_s;       /* practical multipliers; <= 0 keeps the default */
  double scale_l;
  double scale_m;
  double c31, c42, c43; /* imported constants; <= 0 keeps 1.0 */
  int literal_alg3;     /* use the literal component rule (audit only) */
  unsigned long long seed;
  int threads;          /* walkers per phase; <= 1 single-threaded */
} hoct_test_options;

void hoct_test_options_init(hoct_test_options* opt);

typedef struct hoct_test_report {
  int accepted;                 /* 1 accept, 0 reject */
  int phase_reached;            /* 1 or 2 */
  long long components_vertex;  /* -1 when the phase norm-rejected / unset */
  long long components_edge;
  unsigned long long neighbor_queries;
  unsigned long long degree_queries;
  unsigned long long total_queries;
  long long stopped_walks;
  long long s, l, m;
  double theta, delta;
  double wall_ms;               /* informational only */
} hoct_test_report;

hoct_status hoct_test_run(const hoct_graph* g, const hoct_test_options* opt,
                          hoct_test_report* report);

/* Deterministic text form of a report (excludes wall time). */
hoct_status hoct_test_report_format(const hoct_test_report* report,
                                    char** out);

/* --- exact oracle checks ---------------------------------------------------
 * check names: "theorem1", "lemma2", "lemma3", "lemma10", "mixing",
 * "colorful", "conductance", "verify-cluster", "walk-equivalence".
 * args is a JSON object (may be NULL / "{}"); keys by check:
 *   theorem1:  max_n (<=7), threads
 *   lemma2:    max_n (<=7), threads
 *   lemma3:    instances, max_n (<=10), seed
 *   lemma10:   step
 *   mixing:    graph checks: lemma4 {graphs,t_max,seed} and lemma9 {seed}
 *              selected via "which": "lemma4" | "lemma9"; or alpha of a
 *              loaded graph when g != NULL: {"i":0|1, "lazy":bool, "d":2}
 *   colorful:  d, eps (string "p/q" or number), cap             (needs g)
 *   conductance: d, set S "0 1 2", optional C; classic:bool      (needs g)
 *   verify-cluster: d, psi_in, psi_out, partition text           (needs g)
 *   walk-equivalence: exhaustive_max_n, random_per_size, seed
 * *pass_out: 1 pass / 0 fail; *report_out: human-readable details. */
hoct_status hoct_oracle_check(const hoct_graph* g, const char* check,
                              const char* args_json, char** report_out,
                              int* pass_out);

/* --- experiments ------------------------------------------------------------ */

/* Bench config (JSON, see README) -> CSV. Deterministic for a fixed config. */
hoct_status hoct_bench_run(const char* config_json, int threads,
                           char** csv_out);

void hoct_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HOCT_H */
