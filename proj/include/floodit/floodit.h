#ifndef FLOODIT_FLOODIT_H
#define FLOODIT_FLOODIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FLOODIT_BUILDING)
#    define FL_API __declspec(dllexport)
#  else
#    define FL_API __declspec(dllimport)
#  endif
#else
#  define FL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fl_status {
    FL_OK = 0,
    FL_ERR_INPUT = 1,    /* invalid graph, parameters or terminal set */
    FL_ERR_PARSE = 2,    /* malformed instance text; message carries the line */
    FL_ERR_CAPACITY = 3, /* instance exceeds the 256-vertex set capacity */
    FL_ERR_RESOURCE = 4, /* oracle or enumeration budget exhausted */
    FL_ERR_INTERNAL = 5,
    FL_ERR_NULL_ARG = 6
} fl_status;

/* Any target colour. */
#define FL_TARGET_ANY (-1)

typedef struct fl_graph fl_graph;
typedef struct fl_result fl_result;
typedef struct fl_report fl_report;

FL_API const char* fl_version(void);
FL_API const char* fl_status_name(fl_status status);
/* Message of the last failed call on this thread; "" if none. */
FL_API const char* fl_last_error(void);
FL_API void fl_string_free(char* s);

/* Graphs. Edges are 2 * edge_count vertex ids, pairwise. */
FL_API fl_status fl_graph_create(size_t vertex_count, size_t colour_count, const uint32_t* colours,
                                 size_t edge_count, const uint32_t* edges, fl_graph** out);
FL_API fl_status fl_graph_parse(const char* text, fl_graph** out);
FL_API fl_status fl_graph_load(const char* path, fl_graph** out);
FL_API fl_status fl_graph_write(const fl_graph* g, char** text);
FL_API fl_status fl_graph_contract(const fl_graph* g, fl_graph** out);
FL_API void fl_graph_free(fl_graph* g);

FL_API size_t fl_graph_vertex_count(const fl_graph* g);
FL_API size_t fl_graph_colour_count(const fl_graph* g);
FL_API size_t fl_graph_edge_count(const fl_graph* g);
FL_API uint32_t fl_graph_colour(const fl_graph* g, uint32_t v);
FL_API int fl_graph_is_connected(const fl_graph* g);
/* Number of connected induced subgraphs. */
FL_API fl_status fl_graph_count_subgraphs(const fl_graph* g, size_t* count);

typedef struct fl_gen_params {
    const char* kind; /* path, cycle, complete, grid, subdivision, random */
    size_t n;
    size_t rows, cols;
    size_t colour_count;     /* 0: max explicit colour + 1, else 3 */
    const uint32_t* colours; /* optional explicit colouring */
    size_t colours_len;
    const char* base;             /* subdivision base: path, cycle or complete */
    size_t base_n;
    const size_t* subdivisions;   /* one value, or one per base edge */
    size_t subdivisions_len;
    double edge_probability;
    uint64_t seed;
} fl_gen_params;

FL_API void fl_gen_params_init(fl_gen_params* params);
FL_API fl_status fl_graph_generate(const fl_gen_params* params, fl_graph** out);

/* Solvers. target is a colour or FL_TARGET_ANY. k_limit 0 means the default. */
FL_API fl_status fl_solve_free(const fl_graph* g, int64_t target, fl_result** out);
FL_API fl_status fl_solve_fixed(const fl_graph* g, uint32_t root, int64_t target, fl_result** out);
FL_API fl_status fl_solve_link(const fl_graph* g, const uint32_t* terminals, size_t terminal_count, int64_t target,
                               size_t k_limit, fl_result** out);

/* Exhaustive oracles. max_states 0 means the default cap. */
FL_API fl_status fl_oracle_free(const fl_graph* g, int64_t target, size_t max_states, fl_result** out);
FL_API fl_status fl_oracle_fixed(const fl_graph* g, uint32_t root, int64_t target, size_t max_states,
                                 fl_result** out);
FL_API fl_status fl_oracle_link(const fl_graph* g, const uint32_t* terminals, size_t terminal_count, int64_t target,
                                size_t max_states, fl_result** out);

FL_API const char* fl_result_variant(const fl_result* r); /* free, fixed, link */
FL_API const char* fl_result_method(const fl_result* r);  /* dp, oracle */
FL_API size_t fl_result_colour_count(const fl_result* r);
/* Moves to finish in colour d; -1 when unknown or unreachable. */
FL_API int64_t fl_result_per_colour(const fl_result* r, uint32_t d);
FL_API uint32_t fl_result_overall(const fl_result* r);
/* Value for the requested target, or overall. */
FL_API uint32_t fl_result_value(const fl_result* r);
FL_API size_t fl_result_witness_length(const fl_result* r);
FL_API fl_status fl_result_witness_move(const fl_result* r, size_t i, uint32_t* vertex, uint32_t* colour);
/* -1 when not applicable. */
FL_API int64_t fl_result_subgraph_count(const fl_result* r);
FL_API int64_t fl_result_state_count(const fl_result* r);
FL_API double fl_result_wall_ms(const fl_result* r);
/* One JSON line, no trailing newline. Free with fl_string_free. */
FL_API fl_status fl_result_record(const fl_result* r, const char* instance, char** json);
FL_API void fl_result_free(fl_result* r);

typedef struct fl_verify_params {
    const char* suite; /* spanning-tree, corollaries, solver-free, solver-fixed, solver-link */
    size_t max_n;
    size_t colours;
    uint64_t seed;
    size_t samples; /* 0: 100 for corollaries, 3 otherwise */
    size_t random;
    size_t max_states;
} fl_verify_params;

FL_API void fl_verify_params_init(fl_verify_params* params);
FL_API fl_status fl_verify(const fl_verify_params* params, fl_report** out);
FL_API int fl_report_passed(const fl_report* r);
FL_API size_t fl_report_checks(const fl_report* r);
FL_API size_t fl_report_failures(const fl_report* r);
FL_API const char* fl_report_summary(const fl_report* r);
FL_API void fl_report_free(fl_report* r);

#ifdef __cplusplus
}
#endif

#endif
