// intervalcast-cli: forecast one series, evaluate a corpus, sweep the
// quantile weight, or dump plot-ready data. Talks to the library through
// the C API only.

#include <intervalcast/intervalcast.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using json = nlohmann::ordered_json;

using series_ptr = std::unique_ptr<ic_series, decltype(&ic_series_free)>;
using corpus_ptr = std::unique_ptr<ic_corpus, decltype(&ic_corpus_free)>;
using forecast_ptr = std::unique_ptr<ic_forecast, decltype(&ic_forecast_free)>;
using report_ptr = std::unique_ptr<ic_report, decltype(&ic_report_free)>;

const char* status_kind(int code) {
  switch (code) {
    case IC_ERR_CONFIG: return "config";
    case IC_ERR_NUMERIC: return "numeric";
    case IC_ERR_IO: return "io";
  }
  return "error";
}

// Machine-readable failure report on stderr; the return value doubles as
// the process exit code.
int report_error(int code, const std::string& message) {
  json err = {{"error",
               {{"code", code}, {"kind", status_kind(code)}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
  return code;
}

int report_status(ic_status st) { return report_error(st, ic_last_error()); }

// Forecasting flags shared by every subcommand.
struct CommonFlags {
  double alpha = 0.05;
  std::string rule = "mqr";
  std::string conformity = "all_bounds";
  std::string transform = "spectral";
  int model_size = 0;
  double lambda_pt = 1000.0;
  double lambda_q = 0.0;
  bool no_calibrate = false;
  double mu0 = 1e-4, rho = 1.03, mu_max = 1e8, tol = 1e-6;
  int max_iter = 1000;
  std::string out;
  std::string format = "csv";
};

struct ForecastFlags {
  std::string input;
  int horizon = 0;
  int seasonal_period = 0;
  CommonFlags common;
};

struct EvaluateFlags {
  std::string train, test, frequency;
  double sample_fraction = 1.0;
  std::uint64_t seed = 0;
  int jobs = 0;
  CommonFlags common;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--alpha", f.alpha, "Miscoverage level in (0,1)")
      ->capture_default_str();
  cmd->add_option("--rule", f.rule, "Forecast rule: mqr, qr, cp or naive")
      ->capture_default_str();
  cmd->add_option("--conformity", f.conformity,
                  "Conformity score set: all_bounds or point_only")
      ->capture_default_str();
  cmd->add_option("--transform", f.transform,
                  "Dictionary learner: spectral or identity")
      ->capture_default_str();
  cmd->add_option("--model-size", f.model_size,
                  "Window length m (0 = automatic)");
  cmd->add_option("--lambda-pt", f.lambda_pt, "Point-forecast data weight")
      ->capture_default_str();
  cmd->add_option("--lambda-q", f.lambda_q,
                  "Quantile data weight (0 = per-rule default)");
  cmd->add_flag("--no-calibrate", f.no_calibrate,
                "Skip conformal calibration");
  cmd->add_option("--mu0", f.mu0, "Initial ADMM penalty")->capture_default_str();
  cmd->add_option("--rho", f.rho, "ADMM penalty growth factor")
      ->capture_default_str();
  cmd->add_option("--mu-max", f.mu_max, "ADMM penalty cap")
      ->capture_default_str();
  cmd->add_option("--tol", f.tol, "Feasibility stop tolerance")
      ->capture_default_str();
  cmd->add_option("--max-iter", f.max_iter, "ADMM iteration cap")
      ->capture_default_str();
  cmd->add_option("--out", f.out, "Output path (default stdout)");
  cmd->add_option("--format", f.format, "Output format: csv or json")
      ->capture_default_str();
  // lets --config (a top-level option) be given after the subcommand name
  cmd->fallthrough();
}

ic_options to_options(const CommonFlags& f) {
  ic_options o;
  ic_options_init(&o);
  o.alpha = f.alpha;
  o.rule = f.rule.c_str();
  o.conformity = f.conformity.c_str();
  o.transform = f.transform.c_str();
  o.model_size = f.model_size;
  o.lambda_pt = f.lambda_pt;
  o.lambda_q = f.lambda_q;
  o.calibrate = f.no_calibrate ? 0 : 1;
  o.mu0 = f.mu0;
  o.rho = f.rho;
  o.mu_max = f.mu_max;
  o.tol = f.tol;
  o.max_iter = f.max_iter;
  return o;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) return report_error(IC_ERR_IO, "cannot open output file: " + path);
  out << text;
  out.close();
  if (!out) return report_error(IC_ERR_IO, "short write to " + path);
  return 0;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

bool check_format(const std::string& format, int& rc) {
  if (format == "csv" || format == "json") return true;
  rc = report_error(IC_ERR_CONFIG, "unknown --format: " + format);
  return false;
}

// ------------------------------------------------------------ forecast --

int run_forecast(const ForecastFlags& f) {
  int rc = 0;
  if (!check_format(f.common.format, rc)) return rc;

  ic_series* raw_series = nullptr;
  ic_status st = ic_series_load_csv(f.input.c_str(), &raw_series);
  if (st != IC_OK) return report_status(st);
  series_ptr series(raw_series, ic_series_free);

  ic_options opts = to_options(f.common);
  opts.horizon = f.horizon;
  opts.seasonal_period = f.seasonal_period;

  ic_forecast* raw_fc = nullptr;
  st = ic_forecast_run(series.get(), &opts, &raw_fc);
  if (st != IC_OK) return report_status(st);
  forecast_ptr fc(raw_fc, ic_forecast_free);

  const int h = ic_forecast_horizon(fc.get());
  const bool calibrated = ic_forecast_calibrated(fc.get()) != 0;
  const double delta = ic_forecast_delta(fc.get());

  std::string text;
  if (f.common.format == "csv") {
    text = "t,lower,point,upper,calibrated,delta\n";
    for (int s = 0; s < h; ++s) {
      text += std::to_string(s + 1);
      text += "," + fmt(ic_forecast_value(fc.get(), s, 3));
      text += "," + fmt(ic_forecast_value(fc.get(), s, 1));
      text += "," + fmt(ic_forecast_value(fc.get(), s, 4));
      text += calibrated ? ",1" : ",0";
      text += "," + fmt(delta) + "\n";
    }
  } else {
    json doc;
    doc["schema_version"] = 1;
    doc["horizon"] = h;
    doc["alpha"] = f.common.alpha;
    doc["rule"] = f.common.rule;
    doc["calibrated"] = calibrated;
    doc["delta"] = delta;
    doc["obs_fit_rmse"] = ic_forecast_obs_fit_rmse(fc.get());
    doc["steps"] = json::array();
    for (int s = 0; s < h; ++s) {
      doc["steps"].push_back({{"t", s + 1},
                              {"lower", ic_forecast_value(fc.get(), s, 3)},
                              {"point", ic_forecast_value(fc.get(), s, 1)},
                              {"upper", ic_forecast_value(fc.get(), s, 4)}});
    }
    doc["warnings"] = json::array();
    for (int i = 0; i < ic_forecast_warning_count(fc.get()); ++i)
      doc["warnings"].push_back(ic_forecast_warning(fc.get(), i));
    text = doc.dump(2) + "\n";
  }
  return write_output(text, f.common.out);
}

// ------------------------------------------------------------ evaluate --

int load_corpus(const EvaluateFlags& f, corpus_ptr& out) {
  ic_corpus* raw = nullptr;
  ic_status st = ic_corpus_load_m4(f.train.c_str(), f.test.c_str(),
                                   f.frequency.c_str(), &raw);
  if (st != IC_OK) return report_status(st);
  out = corpus_ptr(raw, ic_corpus_free);
  return 0;
}

int run_evaluate(const EvaluateFlags& f) {
  int rc = 0;
  if (!check_format(f.common.format, rc)) return rc;

  corpus_ptr corpus(nullptr, ic_corpus_free);
  if ((rc = load_corpus(f, corpus)) != 0) return rc;

  ic_options opts = to_options(f.common);
  opts.jobs = f.jobs;
  opts.sample_fraction = f.sample_fraction;
  opts.seed = f.seed;

  ic_report* raw_rep = nullptr;
  ic_status st = ic_evaluate_run(corpus.get(), &opts, &raw_rep);
  if (st != IC_OK) return report_status(st);
  report_ptr rep(raw_rep, ic_report_free);

  char* rendered = nullptr;
  st = f.common.format == "csv" ? ic_report_render_csv(rep.get(), &rendered)
                                : ic_report_render_json(rep.get(), &rendered);
  if (st != IC_OK) return report_status(st);
  std::string text(rendered);
  ic_string_free(rendered);
  return write_output(text, f.common.out);
}

// --------------------------------------------------------- sweep-lambda --

int run_sweep(const EvaluateFlags& f, const std::vector<double>& lambdas) {
  int rc = 0;
  if (!check_format(f.common.format, rc)) return rc;
  if (lambdas.empty())
    return report_error(IC_ERR_CONFIG, "--lambdas must list at least one value");
  for (double lambda : lambdas)
    if (!(lambda > 0.0))
      return report_error(IC_ERR_CONFIG,
                          "--lambdas values must be positive numbers");

  corpus_ptr corpus(nullptr, ic_corpus_free);
  if ((rc = load_corpus(f, corpus)) != 0) return rc;

  std::vector<ic_aggregate> rows;
  for (double lambda : lambdas) {
    ic_options opts = to_options(f.common);
    opts.jobs = f.jobs;
    opts.sample_fraction = f.sample_fraction;
    opts.seed = f.seed;
    opts.lambda_q = lambda;

    ic_report* raw_rep = nullptr;
    ic_status st = ic_evaluate_run(corpus.get(), &opts, &raw_rep);
    if (st != IC_OK) return report_status(st);
    report_ptr rep(raw_rep, ic_report_free);

    ic_aggregate agg;
    st = ic_report_aggregate(rep.get(), &agg);
    if (st != IC_OK) return report_status(st);
    rows.push_back(agg);
  }

  std::string text;
  if (f.common.format == "csv") {
    text =
        "lambda,mean_msis,coverage,acd,mean_width,mean_obs_fit_rmse,"
        "series_ok,series_failed\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const ic_aggregate& a = rows[i];
      text += fmt(lambdas[i]) + "," + fmt(a.mean_msis) + "," +
              fmt(a.coverage) + "," + fmt(a.acd) + "," + fmt(a.mean_width) +
              "," + fmt(a.mean_obs_fit_rmse) + "," +
              std::to_string(a.series_ok) + "," +
              std::to_string(a.series_failed) + "\n";
    }
  } else {
    json doc;
    doc["schema_version"] = 1;
    doc["rule"] = f.common.rule;
    doc["alpha"] = f.common.alpha;
    doc["rows"] = json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
      const ic_aggregate& a = rows[i];
      doc["rows"].push_back({{"lambda", lambdas[i]},
                             {"mean_msis", a.mean_msis},
                             {"coverage", a.coverage},
                             {"acd", a.acd},
                             {"mean_width", a.mean_width},
                             {"mean_obs_fit_rmse", a.mean_obs_fit_rmse},
                             {"series_ok", a.series_ok},
                             {"series_failed", a.series_failed}});
    }
    text = doc.dump(2) + "\n";
  }
  return write_output(text, f.common.out);
}

// ------------------------------------------------------------- plotdata --

int run_plotdata(const ForecastFlags& f, const std::string& phase) {
  if (phase != "estimation" && phase != "calibrated" && phase != "both")
    return report_error(IC_ERR_CONFIG, "unknown --phase: " + phase);

  ic_series* raw_series = nullptr;
  ic_status st = ic_series_load_csv(f.input.c_str(), &raw_series);
  if (st != IC_OK) return report_status(st);
  series_ptr series(raw_series, ic_series_free);

  ic_options opts = to_options(f.common);
  opts.horizon = f.horizon;
  opts.seasonal_period = f.seasonal_period;

  ic_forecast* raw_fc = nullptr;
  st = ic_forecast_run(series.get(), &opts, &raw_fc);
  if (st != IC_OK) return report_status(st);
  forecast_ptr fc(raw_fc, ic_forecast_free);

  const int l = ic_series_length(series.get());
  const int h = ic_forecast_horizon(fc.get());

  std::string text = "t,role,value\n";
  for (int t = 0; t < l; ++t)
    text += std::to_string(t + 1) + ",observed," +
            fmt(ic_series_value(series.get(), t)) + "\n";

  auto emit = [&](const char* role, int column) {
    for (int s = 0; s < h; ++s)
      text += std::to_string(l + s + 1) + "," + role + "," +
              fmt(ic_forecast_value(fc.get(), s, column)) + "\n";
  };

  if (phase == "both") {
    // Four bound tracks so pre/post calibration can be overlaid.
    emit("est_lower", 0);
    emit("est_upper", 2);
    emit("cal_lower", 3);
    emit("cal_upper", 4);
  } else if (phase == "estimation") {
    emit("point", 1);
    emit("lower", 0);
    emit("upper", 2);
  } else {
    emit("point", 1);
    emit("lower", 3);
    emit("upper", 4);
  }
  return write_output(text, f.common.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval time-series forecasting via convolutional "
               "nuclear-norm minimization"};
  app.set_version_flag("--version", ic_version());
  app.set_config("--config", "",
                 "key=value file mirroring the flags, one [subcommand] "
                 "section per command; explicit flags win");
  app.require_subcommand(1);

  ForecastFlags fc_flags;
  CLI::App* fc_cmd =
      app.add_subcommand("forecast", "Forecast one series from a value CSV");
  fc_cmd->add_option("--input", fc_flags.input, "Series CSV, one value per line")
      ->required();
  fc_cmd->add_option("--horizon", fc_flags.horizon, "Steps to forecast")
      ->required();
  fc_cmd->add_option("--seasonal-period", fc_flags.seasonal_period,
                     "Seasonal period (default 1)");
  add_common_flags(fc_cmd, fc_flags.common);

  ForecastFlags pd_flags;
  std::string pd_phase = "both";
  CLI::App* pd_cmd = app.add_subcommand(
      "plotdata", "Tidy (t, role, value) dump of a forecast for plotting");
  pd_cmd->add_option("--input", pd_flags.input, "Series CSV, one value per line")
      ->required();
  pd_cmd->add_option("--horizon", pd_flags.horizon, "Steps to forecast")
      ->required();
  pd_cmd->add_option("--seasonal-period", pd_flags.seasonal_period,
                     "Seasonal period (default 1)");
  pd_cmd->add_option("--phase", pd_phase,
                     "Bound set: estimation, calibrated or both")
      ->capture_default_str();
  add_common_flags(pd_cmd, pd_flags.common);

  EvaluateFlags ev_flags;
  CLI::App* ev_cmd =
      app.add_subcommand("evaluate", "Score every series of an M4-format corpus");
  ev_cmd->add_option("--train", ev_flags.train, "Training CSV (id,values...)")
      ->required();
  ev_cmd->add_option("--test", ev_flags.test, "Test CSV (id,values...)")
      ->required();
  ev_cmd->add_option("--frequency", ev_flags.frequency,
                     "hourly, daily, weekly, monthly, quarterly or yearly")
      ->required();
  ev_cmd->add_option("--sample-fraction", ev_flags.sample_fraction,
                     "Evaluate a deterministic subsample in (0,1]")
      ->capture_default_str();
  ev_cmd->add_option("--seed", ev_flags.seed, "Subsample seed");
  ev_cmd->add_option("--jobs", ev_flags.jobs, "Worker threads (0 = 1)")
      ->envname("INTERVALCAST_JOBS");
  add_common_flags(ev_cmd, ev_flags.common);

  EvaluateFlags sw_flags;
  std::vector<double> sw_lambdas;
  CLI::App* sw_cmd = app.add_subcommand(
      "sweep-lambda", "Evaluate a corpus across quantile weights");
  sw_cmd->add_option("--train", sw_flags.train, "Training CSV (id,values...)")
      ->required();
  sw_cmd->add_option("--test", sw_flags.test, "Test CSV (id,values...)")
      ->required();
  sw_cmd->add_option("--frequency", sw_flags.frequency,
                     "hourly, daily, weekly, monthly, quarterly or yearly")
      ->required();
  sw_cmd->add_option("--lambdas", sw_lambdas, "Comma-separated weight list")
      ->required()
      ->delimiter(',');
  sw_cmd->add_option("--sample-fraction", sw_flags.sample_fraction,
                     "Evaluate a deterministic subsample in (0,1]")
      ->capture_default_str();
  sw_cmd->add_option("--seed", sw_flags.seed, "Subsample seed");
  sw_cmd->add_option("--jobs", sw_flags.jobs, "Worker threads (0 = 1)")
      ->envname("INTERVALCAST_JOBS");
  add_common_flags(sw_cmd, sw_flags.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    return report_error(IC_ERR_CONFIG, e.what());
  }

  if (*fc_cmd) return run_forecast(fc_flags);
  if (*pd_cmd) return run_plotdata(pd_flags, pd_phase);
  if (*ev_cmd) return run_evaluate(ev_flags);
  if (*sw_cmd) return run_sweep(sw_flags, sw_lambdas);
  return report_error(IC_ERR_CONFIG, "no subcommand given");
}
