/*
 * courtsim C API.
 *
 * Handles are opaque; every function that can fail returns a courtsim_status
 * and leaves a message retrievable with courtsim_last_error() on the calling
 * thread. Strings returned by the library are owned by it unless stated.
 */
#ifndef COURTSIM_COURTSIM_H
#define COURTSIM_COURTSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(COURTSIM_BUILDING_LIBRARY)
#define COURTSIM_API __declspec(dllexport)
#else
#define COURTSIM_API __declspec(dllimport)
#endif
#else
#define COURTSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum courtsim_status {
  COURTSIM_OK = 0,
  COURTSIM_E_INVALID_ARGUMENT = 1, /* bad handle, flag value or configuration */
  COURTSIM_E_VALIDATION = 2,       /* input data failed validation */
  COURTSIM_E_IO = 3,               /* file could not be read or written */
  COURTSIM_E_RUNTIME = 4           /* anything else raised during a run */
} courtsim_status;

typedef enum courtsim_severity {
  COURTSIM_SEVERITY_ERROR = 0,
  COURTSIM_SEVERITY_WARNING = 1,
  COURTSIM_SEVERITY_NOTE = 2
} courtsim_severity;

typedef struct courtsim_data courtsim_data;
typedef struct courtsim_config courtsim_config;

COURTSIM_API const char* courtsim_version(void);
COURTSIM_API const char* courtsim_last_error(void);

/* Loads games.csv, teams.csv, picks.csv (+ optional priors.csv, eras.csv)
 * from `dir`. On COURTSIM_OK or COURTSIM_E_VALIDATION *out is a valid handle
 * whose diagnostics can be inspected; it holds no seasons on validation
 * failure. */
COURTSIM_API courtsim_status courtsim_data_load(const char* dir, courtsim_data** out);
COURTSIM_API void courtsim_data_free(courtsim_data* data);
COURTSIM_API size_t courtsim_data_season_count(const courtsim_data* data);
COURTSIM_API const char* courtsim_data_season_id(const courtsim_data* data, size_t index);
COURTSIM_API size_t courtsim_data_diagnostic_count(const courtsim_data* data);
/* Formatted "path:line: severity [code] message"; NULL when out of range. */
COURTSIM_API const char* courtsim_data_diagnostic(const courtsim_data* data, size_t index,
                                                  courtsim_severity* severity);

/* A new configuration starts at the defaults: method i, basic model,
 * monte-carlo mode, unbounded window, prior 0.5, incentives (0.5, 5.0, 3), 1000
 * replications, seed 0, threads 0 (all cores). */
COURTSIM_API courtsim_status courtsim_config_create(courtsim_config** out);
COURTSIM_API void courtsim_config_free(courtsim_config* config);
COURTSIM_API courtsim_status courtsim_config_set_method(courtsim_config* config, const char* method);
COURTSIM_API courtsim_status courtsim_config_set_model(courtsim_config* config, const char* model);
COURTSIM_API courtsim_status courtsim_config_set_mode(courtsim_config* config, const char* mode);
/* 0 = unbounded (all games). */
COURTSIM_API courtsim_status courtsim_config_set_window(courtsim_config* config, uint32_t games);
COURTSIM_API courtsim_status courtsim_config_set_prior(courtsim_config* config, double prior);
COURTSIM_API courtsim_status courtsim_config_set_replications(courtsim_config* config, uint32_t reps);
COURTSIM_API courtsim_status courtsim_config_set_seed(courtsim_config* config, uint64_t seed);
COURTSIM_API courtsim_status courtsim_config_set_incentives(courtsim_config* config, double win_pct_factor,
                                                            double net_rating_decrement,
                                                            int32_t rest_trigger_remaining);
/* Caps worker threads; affects speed only. 0 = hardware concurrency. */
COURTSIM_API courtsim_status courtsim_config_set_threads(courtsim_config* config, uint32_t threads);
/* Checks the combination of settings (e.g. net-rating methods cannot run
 * closed-loop). */
COURTSIM_API courtsim_status courtsim_config_validate(const courtsim_config* config);

/* `season` is a season id or "all". Writes accuracy.csv and wins_delta.csv. */
COURTSIM_API courtsim_status courtsim_simulate(const courtsim_data* data, const char* season,
                                               const courtsim_config* config, const char* out_dir);
/* Writes sweep.csv for the given window sizes. */
COURTSIM_API courtsim_status courtsim_sweep(const courtsim_data* data, const char* season,
                                            const courtsim_config* config, const uint32_t* windows,
                                            size_t window_count, const char* out_dir);
/* Runs every listed method with the otherwise shared config and writes
 * compare.csv and accuracy.csv. */
COURTSIM_API courtsim_status courtsim_compare(const courtsim_data* data, const char* season,
                                              const courtsim_config* config, const char* const* methods,
                                              size_t method_count, const char* out_dir);

/* Human-readable summary of the report files in `in_dir`. Release with
 * courtsim_string_free. */
COURTSIM_API courtsim_status courtsim_report(const char* in_dir, char** text);
COURTSIM_API void courtsim_string_free(char* text);

/* Outcome functions, exposed for bindings. `out` receives
 * (p_home_win, p_away_win, p_tie). */
COURTSIM_API courtsim_status courtsim_bernoulli_race(double p1, double p2, int allow_ties, double out[3]);

#ifdef __cplusplus
}
#endif

#endif /* COURTSIM_COURTSIM_H */
