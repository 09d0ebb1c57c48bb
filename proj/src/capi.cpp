#include "abring/abring.h"

#include <exception>
#include <memory>
#include <new>
#include <string>

#include "abring/acceptance.hpp"
#include "abring/config.hpp"
#include "abring/entropy.hpp"
#include "abring/error.hpp"
#include "abring/model.hpp"
#include "abring/sweep.hpp"

struct abring_config {
  abring::RunConfig config;
};

struct abring_run {
  std::string output;
  std::size_t rows = 0;
  std::size_t bound_states = 0;
  abring_status status = ABRING_OK;
};

namespace {

thread_local std::string last_error;

abring_status status_of(abring::ErrorKind kind) {
  switch (kind) {
    case abring::ErrorKind::Config: return ABRING_ERROR_CONFIG;
    case abring::ErrorKind::NoBoundState: return ABRING_ERROR_NO_STATES;
    case abring::ErrorKind::Numerical: return ABRING_ERROR_NUMERICAL;
    case abring::ErrorKind::Domain: return ABRING_ERROR_DOMAIN;
    case abring::ErrorKind::Io: return ABRING_ERROR_IO;
    case abring::ErrorKind::InvalidArgument: return ABRING_ERROR_INVALID_ARGUMENT;
  }
  return ABRING_ERROR_INTERNAL;
}

abring_status fail(abring_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
abring_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const abring::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ABRING_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ABRING_ERROR_INTERNAL, e.what());
  }
}

abring::ModelParams to_model(const abring_params& p) {
  abring::ModelParams m;
  m.mass = p.mass;
  m.hbar = p.hbar;
  m.charge = p.charge;
  m.light_speed = p.light_speed;
  m.delta = p.delta;
  m.v1 = p.v1;
  m.b_field = p.b_field;
  m.xi = p.xi;
  m.alpha = p.alpha;
  return m;
}

abring::PipelineOptions to_options(const abring_grid* grid) {
  abring::GridConfig g;
  if (grid) {
    if (grid->r_points) g.r_points = grid->r_points;
    if (grid->k_points) g.k_points = grid->k_points;
    if (grid->r_max > 0.0) g.r_max = grid->r_max;
    if (grid->k_max > 0.0) g.k_max = grid->k_max;
    g.convergence_check = grid->convergence_check != 0;
  }
  return abring::pipeline_options(g);
}

unsigned resolve_threads(unsigned threads) { return threads ? threads : abring::threads_from_env(); }

}  // namespace

extern "C" {

const char* abring_version(void) { return "1.0.0"; }

const char* abring_status_string(abring_status status) {
  switch (status) {
    case ABRING_OK: return "ok";
    case ABRING_ERROR_CONFIG: return "configuration error";
    case ABRING_ERROR_NO_STATES: return "no computable bound states";
    case ABRING_ERROR_NUMERICAL: return "numerical failure";
    case ABRING_ERROR_DOMAIN: return "parameter outside the model domain";
    case ABRING_ERROR_IO: return "i/o error";
    case ABRING_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case ABRING_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* abring_last_error(void) { return last_error.c_str(); }

void abring_params_default(abring_params* params) {
  if (!params) return;
  const abring::ModelParams d;
  *params = abring_params{d.mass, d.hbar, d.charge, d.light_speed, d.delta, d.v1, d.b_field, d.xi, d.alpha};
}

void abring_grid_default(abring_grid* grid) {
  if (!grid) return;
  const abring::GridConfig d;
  *grid = abring_grid{d.r_points, d.k_points, 0.0, 0.0, d.convergence_check ? 1 : 0};
}

double abring_flux_quantum(const abring_params* params) {
  return params ? to_model(*params).flux_quantum() : 0.0;
}

abring_status abring_energy(const abring_params* params, int n, int m, abring_bound_state* state) {
  if (!params || !state) return fail(ABRING_ERROR_INVALID_ARGUMENT, "abring_energy: null argument");
  return guarded([&] {
    const auto r = abring::energy_closed_form(to_model(*params), {n, m});
    *state = abring_bound_state{r.exists ? 1 : 0, r.energy,    r.epsilon,   r.set.lambda, r.set.nu,
                                r.set.beta0,      r.set.beta1, r.set.beta2, r.set.eta};
    if (!r.exists) last_error = r.rejection;
    return ABRING_OK;
  });
}

abring_status abring_entropy(const abring_params* params, int n, int m, const abring_grid* grid,
                             abring_entropy_report* report) {
  if (!params || !report) return fail(ABRING_ERROR_INVALID_ARGUMENT, "abring_entropy: null argument");
  return guarded([&] {
    const auto r = abring::entropy_pipeline(to_model(*params), {n, m}, to_options(grid)).report;
    *report = abring_entropy_report{r.s_r,    r.s_k,        r.sum, r.bbm_bound, r.margin, r.pass ? 1 : 0,
                                    r.norm_residual_r, r.norm_residual_k};
    return ABRING_OK;
  });
}

abring_status abring_effective_potential(const abring_params* params, int n, int m, const double* r, double* out,
                                         size_t count) {
  if (!params || (count && (!r || !out))) {
    return fail(ABRING_ERROR_INVALID_ARGUMENT, "abring_effective_potential: null argument");
  }
  return guarded([&] {
    const auto model = to_model(*params);
    model.validate();
    for (size_t i = 0; i < count; ++i) out[i] = abring::effective_potential(model, {n, m}, r[i]);
    return ABRING_OK;
  });
}

abring_status abring_config_load(const char* path, abring_config** config) {
  if (!path || !config) return fail(ABRING_ERROR_INVALID_ARGUMENT, "abring_config_load: null argument");
  *config = nullptr;
  return guarded([&] {
    *config = new abring_config{abring::load_config(path)};
    return ABRING_OK;
  });
}

abring_status abring_config_parse(const char* text, abring_config** config) {
  if (!text || !config) return fail(ABRING_ERROR_INVALID_ARGUMENT, "abring_config_parse: null argument");
  *config = nullptr;
  return guarded([&] {
    *config = new abring_config{abring::parse_config(text)};
    return ABRING_OK;
  });
}

abring_status abring_config_set_format(abring_config* config, abring_format format) {
  if (!config) return fail(ABRING_ERROR_INVALID_ARGUMENT, "abring_config_set_format: null config");
  switch (format) {
    case ABRING_FORMAT_CSV: config->config.output.format = abring::OutputFormat::Csv; return ABRING_OK;
    case ABRING_FORMAT_JSON: config->config.output.format = abring::OutputFormat::Json; return ABRING_OK;
  }
  return fail(ABRING_ERROR_INVALID_ARGUMENT, "abring_config_set_format: unknown format");
}

abring_status abring_config_output_path(const abring_config* config, const char** path) {
  if (!config || !path) return fail(ABRING_ERROR_INVALID_ARGUMENT, "abring_config_output_path: null argument");
  *path = config->config.output.path.c_str();
  return ABRING_OK;
}

void abring_config_free(abring_config* config) { delete config; }

abring_status abring_run_energy(const abring_config* config, unsigned threads, abring_run** run) {
  if (!config || !run) return fail(ABRING_ERROR_INVALID_ARGUMENT, "abring_run_energy: null argument");
  *run = nullptr;
  return guarded([&] {
    const auto rows = abring::run_energy(config->config, resolve_threads(threads));
    auto result = std::make_unique<abring_run>();
    result->output = abring::format_energy(rows, config->config.output.format);
    result->rows = rows.size();
    for (const auto& row : rows) result->bound_states += row.state.exists ? 1 : 0;
    // A missing state is a valid answer here: the row reports exists=false.
    result->status = ABRING_OK;
    *run = result.release();
    return ABRING_OK;
  });
}

abring_status abring_run_entropy(const abring_config* config, unsigned threads, abring_run** run) {
  if (!config || !run) return fail(ABRING_ERROR_INVALID_ARGUMENT, "abring_run_entropy: null argument");
  *run = nullptr;
  return guarded([&] {
    const auto rows = abring::run_entropy(config->config, resolve_threads(threads));
    auto result = std::make_unique<abring_run>();
    result->output = abring::format_entropy(rows, config->config.output.format);
    result->rows = rows.size();
    for (const auto& row : rows) {
      if (row.result) ++result->bound_states;
      else if (row.failure != abring::ErrorKind::NoBoundState && last_error.empty()) last_error = row.message;
    }
    result->status = static_cast<abring_status>(abring::entropy_exit_code(rows));
    *run = result.release();
    return ABRING_OK;
  });
}

abring_status abring_run_figures(const abring_config* config, const char* directory, abring_run** run) {
  if (!config || !directory || !run) return fail(ABRING_ERROR_INVALID_ARGUMENT, "abring_run_figures: null argument");
  *run = nullptr;
  return guarded([&] {
    const auto outcome = abring::write_figures(config->config, directory);
    auto result = std::make_unique<abring_run>();
    for (const auto& f : outcome.written) result->output += f + "\n";
    for (const auto& f : outcome.skipped) result->output += "# skipped " + f + "\n";
    result->rows = outcome.written.size() + outcome.skipped.size();
    result->bound_states = outcome.written.size();
    result->status = outcome.written.empty() ? ABRING_ERROR_NO_STATES : ABRING_OK;
    *run = result.release();
    return ABRING_OK;
  });
}

const char* abring_run_output(const abring_run* run) { return run ? run->output.c_str() : ""; }
size_t abring_run_rows(const abring_run* run) { return run ? run->rows : 0; }
size_t abring_run_bound_states(const abring_run* run) { return run ? run->bound_states : 0; }
abring_status abring_run_status(const abring_run* run) { return run ? run->status : ABRING_ERROR_INVALID_ARGUMENT; }
void abring_run_free(abring_run* run) { delete run; }

abring_status abring_check(int criterion, const char* determinism_config, abring_check_callback callback, void* user,
                           int* all_passed) {
  if (criterion < 0 || criterion > abring::acceptance::kCriterionCount) {
    return fail(ABRING_ERROR_INVALID_ARGUMENT, "abring_check: criterion must be 0..10");
  }
  return guarded([&] {
    abring::acceptance::Options options;
    if (criterion) options.only = {criterion};
    if (determinism_config) options.determinism_config = determinism_config;
    bool ok = true;
    abring::acceptance::run(options, [&](const abring::acceptance::CriterionResult& r) {
      ok = ok && r.passed;
      if (callback) callback(r.id, r.passed ? 1 : 0, abring::acceptance::format(r).c_str(), user);
    });
    if (all_passed) *all_passed = ok ? 1 : 0;
    return ABRING_OK;
  });
}

}  // extern "C"
