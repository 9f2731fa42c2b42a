#include "intervalcast/intervalcast.h"

#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/types.hpp"
#include "data/data.hpp"
#include "eval/evaluate.hpp"
#include "pipeline/pipeline.hpp"

using namespace intervalcast;

struct ic_series {
  Series s;
};

struct ic_corpus {
  data::M4Corpus c;
};

struct ic_forecast {
  Forecast fc;
};

struct ic_report {
  eval::Report r;
};

namespace {

thread_local std::string g_last_error;

ic_status fail(ic_status code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

// Translate the C++ error taxonomy onto the three failure statuses.
template <typename Fn>
ic_status guarded(Fn&& fn) {
  try {
    fn();
    return IC_OK;
  } catch (const ConfigError& e) {
    return fail(IC_ERR_CONFIG, e.what());
  } catch (const IngestError& e) {
    return fail(IC_ERR_IO, e.what());
  } catch (const SolverError& e) {
    return fail(IC_ERR_NUMERIC, e.what());
  } catch (const MetricError& e) {
    return fail(IC_ERR_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(IC_ERR_NUMERIC, e.what());
  }
}

pipeline::ForecastConfig to_config(const ic_options& o) {
  pipeline::ForecastConfig cfg;
  cfg.horizon = o.horizon;
  cfg.alpha = o.alpha;
  cfg.rule = pipeline::parse_rule(o.rule ? o.rule : "mqr");
  cfg.conformity =
      pipeline::parse_conformity(o.conformity ? o.conformity : "all_bounds");
  cfg.transform =
      pipeline::parse_transform(o.transform ? o.transform : "spectral");
  cfg.model_size = o.model_size;
  cfg.lambda_pt = o.lambda_pt;
  cfg.lambda_q = o.lambda_q;
  cfg.calibrate = o.calibrate != 0;
  cfg.seasonal_period = o.seasonal_period > 0 ? o.seasonal_period : 1;
  cfg.solver.mu0 = o.mu0;
  cfg.solver.rho = o.rho;
  cfg.solver.mu_max = o.mu_max;
  cfg.solver.tol = o.tol;
  cfg.solver.max_iter = o.max_iter;
  return cfg;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* ic_version(void) { return "1.0.0"; }

const char* ic_last_error(void) { return g_last_error.c_str(); }

void ic_options_init(ic_options* opts) {
  if (!opts) return;
  opts->horizon = 0;
  opts->alpha = 0.05;
  opts->rule = "mqr";
  opts->conformity = "all_bounds";
  opts->transform = "spectral";
  opts->model_size = 0;
  opts->lambda_pt = 1000.0;
  opts->lambda_q = 0.0;
  opts->calibrate = 1;
  opts->seasonal_period = 0;
  opts->mu0 = 1e-4;
  opts->rho = 1.03;
  opts->mu_max = 1e8;
  opts->tol = 1e-6;
  opts->max_iter = 1000;
  opts->jobs = 0;
  opts->sample_fraction = 1.0;
  opts->seed = 0;
}

ic_status ic_series_create(const char* id, const double* values, int length,
                           ic_series** out) {
  if (!out || !values || length < 1 || !id)
    return fail(IC_ERR_CONFIG, "ic_series_create: bad arguments");
  return guarded([&] {
    auto* s = new ic_series;
    s->s.id = id;
    s->s.values.assign(values, values + length);
    *out = s;
  });
}

ic_status ic_series_load_csv(const char* path, ic_series** out) {
  if (!out || !path)
    return fail(IC_ERR_CONFIG, "ic_series_load_csv: bad arguments");
  return guarded([&] {
    auto* s = new ic_series;
    s->s.id = path;
    s->s.values = data::load_generic_csv(path);
    *out = s;
  });
}

int ic_series_length(const ic_series* s) {
  return s ? static_cast<int>(s->s.values.size()) : 0;
}

double ic_series_value(const ic_series* s, int index) {
  if (!s || index < 0 || index >= static_cast<int>(s->s.values.size()))
    return 0.0;
  return s->s.values[index];
}

void ic_series_free(ic_series* s) { delete s; }

ic_status ic_corpus_load_m4(const char* train_path, const char* test_path,
                            const char* frequency, ic_corpus** out) {
  if (!out || !train_path || !test_path || !frequency)
    return fail(IC_ERR_CONFIG, "ic_corpus_load_m4: bad arguments");
  return guarded([&] {
    auto* c = new ic_corpus;
    c->c = data::load_m4_corpus(train_path, test_path,
                                data::parse_frequency(frequency));
    *out = c;
  });
}

ic_status ic_corpus_sample(const ic_corpus* corpus, double fraction,
                           uint64_t seed, ic_corpus** out) {
  if (!out || !corpus)
    return fail(IC_ERR_CONFIG, "ic_corpus_sample: bad arguments");
  return guarded([&] {
    auto* c = new ic_corpus;
    c->c = data::sample_corpus(corpus->c, fraction, seed);
    *out = c;
  });
}

int ic_corpus_size(const ic_corpus* corpus) {
  return corpus ? static_cast<int>(corpus->c.items.size()) : 0;
}

void ic_corpus_free(ic_corpus* corpus) { delete corpus; }

ic_status ic_forecast_run(const ic_series* series, const ic_options* opts,
                          ic_forecast** out) {
  if (!out || !series || !opts)
    return fail(IC_ERR_CONFIG, "ic_forecast_run: bad arguments");
  return guarded([&] {
    auto* fc = new ic_forecast;
    try {
      fc->fc = pipeline::forecast_series(series->s.values, to_config(*opts));
    } catch (...) {
      delete fc;
      throw;
    }
    *out = fc;
  });
}

int ic_forecast_horizon(const ic_forecast* fc) {
  return fc ? static_cast<int>(fc->fc.steps.size()) : 0;
}

double ic_forecast_value(const ic_forecast* fc, int step, int column) {
  if (!fc || step < 0 || step >= static_cast<int>(fc->fc.steps.size()))
    return 0.0;
  const IntervalStep& s = fc->fc.steps[step];
  switch (column) {
    case 0: return s.lower;
    case 1: return s.point;
    case 2: return s.upper;
    case 3: return s.cal_lower;
    case 4: return s.cal_upper;
  }
  return 0.0;
}

double ic_forecast_delta(const ic_forecast* fc) {
  return fc ? fc->fc.delta : 0.0;
}

int ic_forecast_calibrated(const ic_forecast* fc) {
  return fc && fc->fc.calibrated ? 1 : 0;
}

double ic_forecast_obs_fit_rmse(const ic_forecast* fc) {
  return fc ? fc->fc.obs_fit_rmse : 0.0;
}

int ic_forecast_warning_count(const ic_forecast* fc) {
  return fc ? static_cast<int>(fc->fc.warnings.size()) : 0;
}

const char* ic_forecast_warning(const ic_forecast* fc, int index) {
  if (!fc || index < 0 || index >= static_cast<int>(fc->fc.warnings.size()))
    return "";
  return fc->fc.warnings[index].c_str();
}

void ic_forecast_free(ic_forecast* fc) { delete fc; }

ic_status ic_evaluate_run(const ic_corpus* corpus, const ic_options* opts,
                          ic_report** out) {
  if (!out || !corpus || !opts)
    return fail(IC_ERR_CONFIG, "ic_evaluate_run: bad arguments");
  return guarded([&] {
    const data::M4Corpus* src = &corpus->c;
    data::M4Corpus sampled;
    if (opts->sample_fraction != 1.0) {
      sampled = data::sample_corpus(corpus->c, opts->sample_fraction,
                                    opts->seed);
      src = &sampled;
    }
    eval::EvalOptions eo;
    eo.cfg = to_config(*opts);
    eo.jobs = opts->jobs > 0 ? opts->jobs : 1;
    auto* rep = new ic_report;
    try {
      rep->r = eval::evaluate_corpus(*src, eo);
    } catch (...) {
      delete rep;
      throw;
    }
    *out = rep;
  });
}

ic_status ic_report_aggregate(const ic_report* report, ic_aggregate* out) {
  if (!report || !out)
    return fail(IC_ERR_CONFIG, "ic_report_aggregate: bad arguments");
  out->mean_msis = report->r.mean_msis;
  out->coverage = report->r.coverage;
  out->acd = report->r.acd;
  out->mean_width = report->r.mean_width;
  out->mean_obs_fit_rmse = report->r.mean_obs_fit;
  out->covered_points = report->r.covered_points;
  out->total_points = report->r.total_points;
  out->series_ok = report->r.ok_count;
  out->series_failed = report->r.failed_count;
  return IC_OK;
}

ic_status ic_report_render_csv(const ic_report* report, char** out) {
  if (!report || !out)
    return fail(IC_ERR_CONFIG, "ic_report_render_csv: bad arguments");
  return guarded([&] { *out = dup_string(eval::render_report_csv(report->r)); });
}

ic_status ic_report_render_json(const ic_report* report, char** out) {
  if (!report || !out)
    return fail(IC_ERR_CONFIG, "ic_report_render_json: bad arguments");
  return guarded([&] { *out = dup_string(eval::render_report_json(report->r)); });
}

void ic_report_free(ic_report* report) { delete report; }

void ic_string_free(char* s) { delete[] s; }

}  // extern "C"
