/* C interface to the abring solver. Every function returns an abring_status;
 * on failure abring_last_error() describes the cause for the calling thread. */
#ifndef ABRING_ABRING_H
#define ABRING_ABRING_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ABRING_BUILDING_LIBRARY)
#    define ABRING_API __declspec(dllexport)
#  else
#    define ABRING_API __declspec(dllimport)
#  endif
#else
#  define ABRING_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum abring_status {
  ABRING_OK = 0,
  ABRING_ERROR_CONFIG = 2,
  ABRING_ERROR_NO_STATES = 3,
  ABRING_ERROR_NUMERICAL = 4,
  ABRING_ERROR_DOMAIN = 5,
  ABRING_ERROR_IO = 6,
  ABRING_ERROR_INVALID_ARGUMENT = 7,
  ABRING_ERROR_INTERNAL = 8
} abring_status;

typedef enum abring_format { ABRING_FORMAT_CSV = 0, ABRING_FORMAT_JSON = 1 } abring_format;

typedef struct abring_params {
  double mass;
  double hbar;
  double charge;
  double light_speed;
  double delta;
  double v1;
  double b_field;
  double xi; /* flux in units of the flux quantum */
  double alpha;
} abring_params;

typedef struct abring_bound_state {
  int exists;
  double energy;
  double epsilon;
  double lambda;
  double nu;
  double beta0;
  double beta1;
  double beta2;
  double eta;
} abring_bound_state;

typedef struct abring_entropy_report {
  double s_r;
  double s_k;
  double sum;
  double bbm_bound;
  double margin;
  int pass;
  double norm_residual_r;
  double norm_residual_k;
} abring_entropy_report;

/* Zero fields select the automatic choice. */
typedef struct abring_grid {
  size_t r_points;
  size_t k_points;
  double r_max;
  double k_max;
  int convergence_check;
} abring_grid;

typedef struct abring_config abring_config;
typedef struct abring_run abring_run;

typedef void (*abring_check_callback)(int criterion, int passed, const char* text, void* user);

ABRING_API const char* abring_version(void);
ABRING_API const char* abring_status_string(abring_status status);
ABRING_API const char* abring_last_error(void);

ABRING_API void abring_params_default(abring_params* params);
ABRING_API void abring_grid_default(abring_grid* grid);
ABRING_API double abring_flux_quantum(const abring_params* params);

/* Closed-form spectrum. A missing bound state is reported through state->exists. */
ABRING_API abring_status abring_energy(const abring_params* params, int n, int m, abring_bound_state* state);
ABRING_API abring_status abring_entropy(const abring_params* params, int n, int m, const abring_grid* grid,
                                        abring_entropy_report* report);
ABRING_API abring_status abring_effective_potential(const abring_params* params, int n, int m, const double* r,
                                                    double* out, size_t count);

ABRING_API abring_status abring_config_load(const char* path, abring_config** config);
ABRING_API abring_status abring_config_parse(const char* text, abring_config** config);
ABRING_API abring_status abring_config_set_format(abring_config* config, abring_format format);
ABRING_API abring_status abring_config_output_path(const abring_config* config, const char** path);
ABRING_API void abring_config_free(abring_config* config);

/* threads == 0 selects ABRING_THREADS or the hardware concurrency. */
ABRING_API abring_status abring_run_energy(const abring_config* config, unsigned threads, abring_run** run);
ABRING_API abring_status abring_run_entropy(const abring_config* config, unsigned threads, abring_run** run);
ABRING_API abring_status abring_run_figures(const abring_config* config, const char* directory, abring_run** run);
/* Formatted output (CSV, JSON or the list of written figure files). */
ABRING_API const char* abring_run_output(const abring_run* run);
ABRING_API size_t abring_run_rows(const abring_run* run);
ABRING_API size_t abring_run_bound_states(const abring_run* run);
/* Entropy: ABRING_OK, ABRING_ERROR_NO_STATES or ABRING_ERROR_NUMERICAL for the run as a whole.
 * Energy runs are always ABRING_OK (missing states are rows with exists = 0); figure runs
 * report ABRING_ERROR_NO_STATES when no density curve could be written. */
ABRING_API abring_status abring_run_status(const abring_run* run);
ABRING_API void abring_run_free(abring_run* run);

/* Runs acceptance criteria 1..10 (criterion 0 runs all). determinism_config may be NULL. */
ABRING_API abring_status abring_check(int criterion, const char* determinism_config, abring_check_callback callback,
                                      void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
