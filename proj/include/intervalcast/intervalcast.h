/* intervalcast: interval time-series forecasting via convolutional
 * nuclear-norm minimization with conformal calibration.
 *
 * C interface of the shared library. All functions return ic_status unless
 * noted; on failure a thread-local message is available through
 * ic_last_error(). Objects returned through out-parameters are owned by the
 * caller and released with the matching *_free function.
 */
#ifndef INTERVALCAST_H
#define INTERVALCAST_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define IC_API __declspec(dllexport)
#else
#define IC_API __attribute__((visibility("default")))
#endif

typedef enum ic_status {
  IC_OK = 0,
  IC_ERR_CONFIG = 2,  /* invalid options, shapes, or parameters */
  IC_ERR_NUMERIC = 3, /* solver divergence or degenerate metric input */
  IC_ERR_IO = 4       /* file and parse errors */
} ic_status;

typedef struct ic_series ic_series;
typedef struct ic_corpus ic_corpus;
typedef struct ic_forecast ic_forecast;
typedef struct ic_report ic_report;

IC_API const char* ic_version(void);

/* Message describing the most recent failure on this thread. */
IC_API const char* ic_last_error(void);

/* ------------------------------------------------------------ options -- */

typedef struct ic_options {
  int horizon;             /* steps to forecast; > 0 for ic_forecast_run */
  double alpha;            /* miscoverage level in (0,1); default 0.05 */
  const char* rule;        /* "mqr" | "qr" | "cp" | "naive" */
  const char* conformity;  /* "all_bounds" | "point_only" */
  const char* transform;   /* "spectral" | "identity" */
  int model_size;          /* 0 = automatic */
  double lambda_pt;        /* point-forecast data weight; default 1000 */
  double lambda_q;         /* quantile data weight; 0 = per-rule default */
  int calibrate;           /* nonzero = conformal calibration on */
  int seasonal_period;     /* 0 = from corpus frequency (or 1) */
  double mu0, rho, mu_max, tol; /* ADMM schedule */
  int max_iter;
  int jobs;                /* evaluation worker threads; 0 = 1 */
  double sample_fraction;  /* evaluation subsample in (0,1]; default 1 */
  uint64_t seed;           /* sampling seed */
} ic_options;

/* Fill every field with its documented default. */
IC_API void ic_options_init(ic_options* opts);

/* ------------------------------------------------------------- series -- */

IC_API ic_status ic_series_create(const char* id, const double* values,
                                  int length, ic_series** out);

/* Single numeric column, optional header line. */
IC_API ic_status ic_series_load_csv(const char* path, ic_series** out);

IC_API int ic_series_length(const ic_series* s);
IC_API double ic_series_value(const ic_series* s, int index);
IC_API void ic_series_free(ic_series* s);

/* ------------------------------------------------------------- corpus -- */

/* M4-format train/test CSV pair. frequency is one of "hourly", "daily",
 * "weekly", "monthly", "quarterly", "yearly". */
IC_API ic_status ic_corpus_load_m4(const char* train_path,
                                   const char* test_path,
                                   const char* frequency, ic_corpus** out);

/* Deterministic proportional subsample (round half up). */
IC_API ic_status ic_corpus_sample(const ic_corpus* corpus, double fraction,
                                  uint64_t seed, ic_corpus** out);

IC_API int ic_corpus_size(const ic_corpus* corpus);
IC_API void ic_corpus_free(ic_corpus* corpus);

/* ----------------------------------------------------------- forecast -- */

IC_API ic_status ic_forecast_run(const ic_series* series,
                                 const ic_options* opts, ic_forecast** out);

IC_API int ic_forecast_horizon(const ic_forecast* fc);

/* Per-step values. column: 0 lower, 1 point, 2 upper (preliminary bounds),
 * 3 calibrated lower, 4 calibrated upper. */
IC_API double ic_forecast_value(const ic_forecast* fc, int step, int column);

IC_API double ic_forecast_delta(const ic_forecast* fc);
IC_API int ic_forecast_calibrated(const ic_forecast* fc);
IC_API double ic_forecast_obs_fit_rmse(const ic_forecast* fc);
IC_API int ic_forecast_warning_count(const ic_forecast* fc);
/* Warning text at `index`; empty string (never NULL) when out of range. */
IC_API const char* ic_forecast_warning(const ic_forecast* fc, int index);
IC_API void ic_forecast_free(ic_forecast* fc);

/* --------------------------------------------------------- evaluation -- */

/* Forecast and score every series of the corpus. opts->jobs controls the
 * worker pool; results are independent of the thread count. */
IC_API ic_status ic_evaluate_run(const ic_corpus* corpus,
                                 const ic_options* opts, ic_report** out);

typedef struct ic_aggregate {
  double mean_msis;
  double coverage;       /* pooled over all points */
  double acd;            /* |(1 - alpha) - coverage| */
  double mean_width;
  double mean_obs_fit_rmse;
  long covered_points;
  long total_points;
  int series_ok;
  int series_failed;
} ic_aggregate;

IC_API ic_status ic_report_aggregate(const ic_report* report,
                                     ic_aggregate* out);

/* Render the full report; *out is heap-allocated, release with
 * ic_string_free. */
IC_API ic_status ic_report_render_csv(const ic_report* report, char** out);
IC_API ic_status ic_report_render_json(const ic_report* report, char** out);

IC_API void ic_report_free(ic_report* report);
IC_API void ic_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* INTERVALCAST_H */
