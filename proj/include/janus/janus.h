#ifndef JANUS_JANUS_H
#define JANUS_JANUS_H

/*
 * C interface to the spin-model Monte Carlo engines.
 *
 * Every fallible call returns a janus_status; on failure a description is
 * available from janus_last_error() until the next call on the same thread.
 * Handles are opaque and must be released with their *_destroy function.
 * Strings returned through `char**` are owned by the caller and released
 * with janus_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define JANUS_API __declspec(dllexport)
#else
#define JANUS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum janus_status {
    JANUS_OK = 0,
    JANUS_ERR_INVALID_ARGUMENT = 1, /* null handle or pointer, bad enum value */
    JANUS_ERR_DOMAIN = 2,           /* value out of range, inconsistent input */
    JANUS_ERR_INCOMPATIBLE = 3,     /* engine cannot simulate this model */
    JANUS_ERR_TOO_LARGE = 4,        /* exact enumeration beyond 2^24 states */
    JANUS_ERR_IO = 5,
    JANUS_ERR_PARSE = 6,            /* malformed file; message carries the line */
    JANUS_ERR_INTERNAL = 7
} janus_status;

JANUS_API const char* janus_version(void);
JANUS_API const char* janus_status_string(janus_status status);
/* Message of the last failed call on this thread, "" if none. */
JANUS_API const char* janus_last_error(void);
JANUS_API void janus_string_free(char* text);

/* ---- run configuration ------------------------------------------------ */

typedef struct janus_config janus_config;

JANUS_API janus_status janus_config_create(janus_config** out);
JANUS_API void janus_config_destroy(janus_config* config);
/* Applies a `key = value` file on top of the current settings. */
JANUS_API janus_status janus_config_load(janus_config* config, const char* path);
/* `key` is `section.key`, e.g. "model.beta" or "run.engine". */
JANUS_API janus_status janus_config_set(janus_config* config, const char* key, const char* value);
/* Canonical text form of the configuration. */
JANUS_API janus_status janus_config_to_string(const janus_config* config, char** out);

typedef struct janus_run_summary {
    uint64_t samples;
    uint64_t sweeps;
    double final_energy;
    double mean_energy;        /* over samples after thermalization */
    double mean_energy_error;  /* blocked standard error; 0 with < 2 samples */
    uint64_t averaged;         /* samples entering mean_energy */
} janus_run_summary;

/* Runs the configured engine and writes the trajectory CSV, its `.meta`
 * sidecar and, if configured, the final snapshot. `summary` may be null. */
JANUS_API janus_status janus_run(const janus_config* config, janus_run_summary* summary);

/* Writes the configured instance's couplings in the interchange format. */
JANUS_API janus_status janus_couplings_write(const janus_config* config, const char* path);

/* ---- snapshots --------------------------------------------------------- */

/* Writes the configured run's random initial configuration. */
JANUS_API janus_status janus_snapshot_write_initial(const janus_config* config, const char* path);

typedef struct janus_snapshot_info {
    char kind[32];
    int side;
    int q;
    uint64_t sites;
    double magnetization; /* Ising only, else 0 */
} janus_snapshot_info;

JANUS_API janus_status janus_snapshot_read_info(const char* path, janus_snapshot_info* info);
/* Energy of the snapshot under the configured model. */
JANUS_API janus_status janus_snapshot_energy(const janus_config* config, const char* path, double* energy);

/* ---- exact oracle -------------------------------------------------------- */

/* observable: "energy", "energy2", "magnetization", "abs-magnetization",
 * "logz", or "energy-fd" (-dlogZ/dbeta by central difference, step 1e-4).
 * Only for q^N <= 2^24. */
JANUS_API janus_status janus_oracle(const janus_config* config, const char* observable, double* value);

/* ---- benchmark ----------------------------------------------------------- */

typedef struct janus_bench_result janus_bench_result;

typedef struct janus_bench_params {
    const char* engines;  /* comma-separated, e.g. "scalar-hb,amsc" */
    int repetitions;      /* >= 1; 5 when 0 */
    double min_seconds;   /* per timed run; 0.05 when 0 */
} janus_bench_params;

JANUS_API janus_status janus_bench(const janus_config* config, const janus_bench_params* params,
                                   janus_bench_result** out);
JANUS_API void janus_bench_destroy(janus_bench_result* result);
JANUS_API size_t janus_bench_count(const janus_bench_result* result);
JANUS_API const char* janus_bench_engine(const janus_bench_result* result, size_t index);
JANUS_API double janus_bench_median_ns(const janus_bench_result* result, size_t index);
/* How many times slower engine `row` is than engine `column`. */
JANUS_API double janus_bench_ratio(const janus_bench_result* result, size_t row, size_t column);
JANUS_API janus_status janus_bench_table(const janus_bench_result* result, char** out);
JANUS_API janus_status janus_bench_csv(const janus_bench_result* result, char** out);

/* ---- graph coloring ------------------------------------------------------ */

typedef struct janus_color_params {
    const char* graph_path;      /* edge list; null to generate a planted graph */
    uint64_t vertices;           /* planted graph size */
    double connectivity;         /* planted graph C_m */
    int colors;                  /* Q */
    uint64_t seed;               /* graph, initial coloring and dynamics */
    double beta_start;
    double beta_end;
    uint64_t steps;
    uint64_t sweeps_per_step;
    const char* graph_out;       /* optional: write the graph as an edge list */
    const char* solution_out;    /* optional: `vertex color` lines of the best coloring */
} janus_color_params;

typedef struct janus_color_result {
    uint64_t vertices;
    uint64_t edges;
    uint64_t subsets;
    uint64_t initial_energy;
    uint64_t best_energy;
    uint64_t sweeps_run;
    int success;
} janus_color_result;

JANUS_API janus_status janus_color(const janus_color_params* params, janus_color_result* result);

/* ---- verification suite -------------------------------------------------- */

typedef void (*janus_verify_callback)(const char* name, int passed, const char* detail, double seconds,
                                      void* user);

/* fault: "" or null for none, "hb-table" to corrupt the heat-bath table.
 * `all_passed` receives 1 when every check passed. */
JANUS_API janus_status janus_verify(const char* fault, janus_verify_callback callback, void* user, int* all_passed);

/* ---- random numbers ------------------------------------------------------ */

typedef struct janus_prng janus_prng;

JANUS_API janus_status janus_prng_create(uint64_t seed, janus_prng** out);
JANUS_API void janus_prng_destroy(janus_prng* prng);
JANUS_API uint32_t janus_prng_next(janus_prng* prng);
JANUS_API uint64_t janus_stream_seed(uint64_t seed, uint64_t index);

#ifdef __cplusplus
}
#endif

#endif
