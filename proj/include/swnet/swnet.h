/* swnet: network analysis of class dependency and other networks.
 *
 * Plain C interface over opaque handles. Every function returns a
 * swnet_status; on failure swnet_last_error() describes the problem for the
 * calling thread. Strings returned through `char**` are owned by the caller
 * and released with swnet_string_free(). JSON documents use the layout
 * {"summary": {...}, "profiles": {name: {"columns": [...], "rows": [...]}}},
 * except group documents, which hold "groups", "background" and "summary".
 */
#ifndef SWNET_SWNET_H
#define SWNET_SWNET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SWNET_API __declspec(dllexport)
#else
#define SWNET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swnet_status {
  SWNET_OK = 0,
  SWNET_INVALID_ARGUMENT = 1,
  SWNET_IO = 2,
  SWNET_PARSE = 3,
  SWNET_DOMAIN = 4,
  SWNET_CORPUS = 5,
  SWNET_EVALUATION = 6,
  SWNET_INTERNAL = 99
} swnet_status;

typedef struct swnet_network swnet_network;
typedef struct swnet_groups swnet_groups;

SWNET_API const char* swnet_version(void);
SWNET_API const char* swnet_last_error(void);
SWNET_API void swnet_string_free(char* s);

/* ---- networks */

typedef struct swnet_load_options {
  int directed;               /* links are ordered pairs */
  int largest_component;      /* keep only the largest weak component */
  const char* attributes_path; /* optional node table, may be NULL */
} swnet_load_options;

SWNET_API swnet_status swnet_network_load(const char* edges_path, const swnet_load_options* options,
                                          swnet_network** out);

typedef struct swnet_extract_options {
  int implicit;             /* copy ancestors' links (default 1) */
  int implicit_inheritance; /* also copy ancestors' inheritance links (default 1) */
  int largest_component;    /* default 1 */
  unsigned threads;
} swnet_extract_options;

SWNET_API void swnet_extract_options_default(swnet_extract_options* options);

/* Builds a class dependency network from the .java files below src_dir.
 * `summary_json` (may be NULL) receives class and link counts. */
SWNET_API swnet_status swnet_network_extract(const char* src_dir, const swnet_extract_options* options,
                                             swnet_network** out, char** summary_json);

/* Writes the edge list and, when nodes_path is not NULL, the node table. */
SWNET_API swnet_status swnet_network_save(const swnet_network* network, const char* edges_path,
                                          const char* nodes_path);
SWNET_API swnet_status swnet_network_size(const swnet_network* network, size_t* nodes, size_t* links);
SWNET_API void swnet_network_free(swnet_network* network);

/* ---- analyses */

SWNET_API swnet_status swnet_stats_json(const swnet_network* network, char** json);

typedef struct swnet_fit_options {
  size_t resamples; /* bootstrap resamples of the power-law test (default 100) */
  uint64_t seed;
} swnet_fit_options;

SWNET_API swnet_status swnet_mixing_json(const swnet_network* network, const swnet_fit_options* fit, char** json);
SWNET_API swnet_status swnet_clustering_json(const swnet_network* network, char** json);

/* ---- groups */

typedef struct swnet_group_options {
  size_t restarts;          /* default 30 */
  size_t tabu_tenure;       /* default 7 */
  size_t max_non_improving; /* 0: twice the residual node count */
  size_t samples;           /* random graphs per significance test, default 100 */
  double level;             /* default 0.01 */
  uint64_t seed;
  unsigned threads;
} swnet_group_options;

SWNET_API void swnet_group_options_default(swnet_group_options* options);
SWNET_API swnet_status swnet_groups_extract(const swnet_network* network, const swnet_group_options* options,
                                            swnet_groups** out);
SWNET_API swnet_status swnet_groups_json(const swnet_groups* groups, char** json);
/* Reads a group document (names refer to nodes of `network`). */
SWNET_API swnet_status swnet_groups_parse(const char* json, const swnet_network* network, swnet_groups** out);
SWNET_API swnet_status swnet_groups_load(const char* path, const swnet_network* network, swnet_groups** out);
SWNET_API swnet_status swnet_groups_count(const swnet_groups* groups, size_t* count);
SWNET_API void swnet_groups_free(swnet_groups* groups);

SWNET_API swnet_status swnet_groupmix_json(const swnet_network* network, const swnet_groups* groups,
                                           int include_pattern, char** json);

/* ---- prediction */

typedef struct swnet_predict_options {
  const char* labels_path; /* node table; NULL uses the network's own attributes */
  const char* label_key;   /* e.g. "package" */
  size_t depth;            /* 0: full labels */
  const char* strategy;    /* groups, neighbors, network, majority, random */
  size_t runs;             /* default 100 */
  uint64_t seed;
  int include_pattern;
  unsigned threads;
} swnet_predict_options;

SWNET_API void swnet_predict_options_default(swnet_predict_options* options);
SWNET_API swnet_status swnet_predict_json(const swnet_network* network, const swnet_groups* groups,
                                          const swnet_predict_options* options, char** json);

#ifdef __cplusplus
}
#endif

#endif /* SWNET_SWNET_H */
