// Exercises the shared library strictly through its public C header, the
// way an external binding would.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include <intervalcast/intervalcast.h>

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/intervalcast_capi_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string yearly_corpus_train() {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    s += "Y" + std::to_string(i + 1);
    double v = 100.0 + 10.0 * i;
    for (int t = 0; t < 30; ++t) {
      v += 2.0 + std::sin(0.7 * t + i);
      s += "," + std::to_string(v);
    }
    s += "\n";
  }
  return s;
}

std::string yearly_corpus_test() {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    s += "Y" + std::to_string(i + 1);
    for (int t = 0; t < 6; ++t)
      s += "," + std::to_string(170.0 + 10.0 * i + 2.0 * t);
    s += "\n";
  }
  return s;
}

}  // namespace

TEST_CASE("version and option defaults") {
  REQUIRE(ic_version() != nullptr);
  CHECK(std::strlen(ic_version()) >= 5);

  ic_options opts;
  ic_options_init(&opts);
  CHECK(opts.horizon == 0);
  CHECK(opts.alpha == 0.05);
  CHECK(std::string(opts.rule) == "mqr");
  CHECK(std::string(opts.conformity) == "all_bounds");
  CHECK(std::string(opts.transform) == "spectral");
  CHECK(opts.model_size == 0);
  CHECK(opts.lambda_pt == 1000.0);
  CHECK(opts.lambda_q == 0.0);
  CHECK(opts.calibrate == 1);
  CHECK(opts.seasonal_period == 0);
  CHECK(opts.mu0 == 1e-4);
  CHECK(opts.rho == 1.03);
  CHECK(opts.mu_max == 1e8);
  CHECK(opts.tol == 1e-6);
  CHECK(opts.max_iter == 1000);
  CHECK(opts.jobs == 0);
  CHECK(opts.sample_fraction == 1.0);
  CHECK(opts.seed == 0);
}

TEST_CASE("series lifecycle") {
  const double vals[] = {1.0, 2.5, 3.5};
  ic_series* s = nullptr;
  REQUIRE(ic_series_create("demo", vals, 3, &s) == IC_OK);
  REQUIRE(s != nullptr);
  CHECK(ic_series_length(s) == 3);
  CHECK(ic_series_value(s, 0) == 1.0);
  CHECK(ic_series_value(s, 2) == 3.5);
  ic_series_free(s);

  CHECK(ic_series_create(nullptr, vals, 3, &s) == IC_ERR_CONFIG);
  CHECK(ic_series_create("x", nullptr, 3, &s) == IC_ERR_CONFIG);
  CHECK(ic_series_create("x", vals, 0, &s) == IC_ERR_CONFIG);
  CHECK(std::strlen(ic_last_error()) > 0);

  TempFile csv("series.csv", "value\n5.5\n6.5\n7.5\n");
  ic_series* loaded = nullptr;
  REQUIRE(ic_series_load_csv(csv.path.c_str(), &loaded) == IC_OK);
  CHECK(ic_series_length(loaded) == 3);
  CHECK(ic_series_value(loaded, 1) == 6.5);
  ic_series_free(loaded);

  CHECK(ic_series_load_csv("/tmp/definitely_missing_ic.csv", &loaded) ==
        IC_ERR_IO);
  CHECK(std::strlen(ic_last_error()) > 0);
}

TEST_CASE("forecast on a constant series is flat with zero delta") {
  std::vector<double> vals(60, 50.0);
  ic_series* s = nullptr;
  REQUIRE(ic_series_create("const", vals.data(), 60, &s) == IC_OK);

  ic_options opts;
  ic_options_init(&opts);
  opts.horizon = 5;

  ic_forecast* fc = nullptr;
  REQUIRE(ic_forecast_run(s, &opts, &fc) == IC_OK);
  REQUIRE(fc != nullptr);
  CHECK(ic_forecast_horizon(fc) == 5);
  CHECK(ic_forecast_calibrated(fc) == 1);
  CHECK(ic_forecast_delta(fc) <= 1e-4);
  for (int t = 0; t < 5; ++t) {
    const double point = ic_forecast_value(fc, t, 1);
    CHECK(point == doctest::Approx(50.0).epsilon(1e-4));
    CHECK(ic_forecast_value(fc, t, 0) == doctest::Approx(point));
    CHECK(ic_forecast_value(fc, t, 2) == doctest::Approx(point));
    CHECK(ic_forecast_value(fc, t, 3) == doctest::Approx(point));
    CHECK(ic_forecast_value(fc, t, 4) == doctest::Approx(point));
  }
  CHECK(ic_forecast_obs_fit_rmse(fc) < 1e-3);
  CHECK(ic_forecast_warning_count(fc) == 0);
  ic_forecast_free(fc);
  ic_series_free(s);
}

TEST_CASE("forecast error reporting") {
  std::vector<double> vals(40, 1.0);
  for (int i = 0; i < 40; ++i) vals[i] += 0.1 * i;
  ic_series* s = nullptr;
  REQUIRE(ic_series_create("t", vals.data(), 40, &s) == IC_OK);

  ic_options opts;
  ic_options_init(&opts);
  ic_forecast* fc = nullptr;

  // horizon missing
  CHECK(ic_forecast_run(s, &opts, &fc) == IC_ERR_CONFIG);

  opts.horizon = 4;
  opts.alpha = 0.0;  // out of range
  CHECK(ic_forecast_run(s, &opts, &fc) == IC_ERR_CONFIG);
  CHECK(std::strlen(ic_last_error()) > 0);

  opts.alpha = 0.05;
  opts.rule = "sorcery";
  CHECK(ic_forecast_run(s, &opts, &fc) == IC_ERR_CONFIG);

  opts.rule = "mqr";
  CHECK(ic_forecast_run(nullptr, &opts, &fc) == IC_ERR_CONFIG);
  CHECK(ic_forecast_run(s, nullptr, &fc) == IC_ERR_CONFIG);
  CHECK(ic_forecast_run(s, &opts, nullptr) == IC_ERR_CONFIG);

  // a valid run after failures succeeds and warnings are reachable
  opts.horizon = 13;  // 40 - 13 = 27 < 2*13 + 2: calibration skipped
  REQUIRE(ic_forecast_run(s, &opts, &fc) == IC_OK);
  CHECK(ic_forecast_calibrated(fc) == 0);
  REQUIRE(ic_forecast_warning_count(fc) >= 1);
  CHECK(std::strlen(ic_forecast_warning(fc, 0)) > 0);
  // out-of-range indices yield an empty string, never a null pointer
  CHECK(std::string(ic_forecast_warning(fc, 99)).empty());
  ic_forecast_free(fc);
  ic_series_free(s);
}

TEST_CASE("corpus loading, sampling and evaluation") {
  TempFile train("train.csv", yearly_corpus_train());
  TempFile test("test.csv", yearly_corpus_test());

  ic_corpus* corpus = nullptr;
  REQUIRE(ic_corpus_load_m4(train.path.c_str(), test.path.c_str(), "yearly",
                            &corpus) == IC_OK);
  CHECK(ic_corpus_size(corpus) == 4);

  ic_corpus* half = nullptr;
  REQUIRE(ic_corpus_sample(corpus, 0.5, 7, &half) == IC_OK);
  CHECK(ic_corpus_size(half) == 2);
  ic_corpus_free(half);

  CHECK(ic_corpus_load_m4("/tmp/nope_ic.csv", test.path.c_str(), "yearly",
                          &corpus) == IC_ERR_IO);
  CHECK(ic_corpus_load_m4(train.path.c_str(), test.path.c_str(), "biweekly",
                          &corpus) == IC_ERR_CONFIG);

  ic_options opts;
  ic_options_init(&opts);
  opts.jobs = 2;
  ic_report* report = nullptr;
  REQUIRE(ic_evaluate_run(corpus, &opts, &report) == IC_OK);
  REQUIRE(report != nullptr);

  ic_aggregate agg;
  REQUIRE(ic_report_aggregate(report, &agg) == IC_OK);
  CHECK(agg.series_ok == 4);
  CHECK(agg.series_failed == 0);
  CHECK(agg.total_points == 24);
  CHECK(agg.covered_points >= 0);
  CHECK(agg.coverage == doctest::Approx(double(agg.covered_points) / 24.0));
  CHECK(agg.mean_msis >= 0.0);
  CHECK(agg.mean_width >= 0.0);

  char* csv = nullptr;
  REQUIRE(ic_report_render_csv(report, &csv) == IC_OK);
  REQUIRE(csv != nullptr);
  CHECK(std::string(csv).find("series_id,status") == 0);
  ic_string_free(csv);

  char* json = nullptr;
  REQUIRE(ic_report_render_json(report, &json) == IC_OK);
  CHECK(std::string(json).find("schema_version") != std::string::npos);
  ic_string_free(json);

  ic_report_free(report);
  ic_corpus_free(corpus);
}

TEST_CASE("null-handle getters degrade gracefully") {
  CHECK(ic_series_length(nullptr) == 0);
  CHECK(ic_corpus_size(nullptr) == 0);
  CHECK(ic_forecast_horizon(nullptr) == 0);
  CHECK(ic_forecast_delta(nullptr) == 0.0);
  CHECK(ic_forecast_calibrated(nullptr) == 0);
  CHECK(ic_forecast_warning_count(nullptr) == 0);
  ic_series_free(nullptr);
  ic_corpus_free(nullptr);
  ic_forecast_free(nullptr);
  ic_report_free(nullptr);
  ic_string_free(nullptr);
}
