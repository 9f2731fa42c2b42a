#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "baselines/baselines.hpp"
#include "core/errors.hpp"
#include "data/rng.hpp"
#include "pipeline/pipeline.hpp"

using namespace intervalcast;
using pipeline::ForecastConfig;

namespace {

std::vector<double> seasonal_ar(int length, uint64_t seed, int sp = 12,
                                double amp = 4.0, double sigma = 1.5) {
  data::Rng rng(seed);
  std::vector<double> s(length);
  double prev = 0.0;
  for (int t = 0; t < length; ++t) {
    prev = 0.7 * prev + sigma * rng.normal();
    s[t] = 30.0 + 0.05 * t + amp * std::sin(2.0 * M_PI * t / sp) + prev;
  }
  return s;
}

double mean_width(const Forecast& fc, bool calibrated) {
  double w = 0.0;
  for (const IntervalStep& s : fc.steps)
    w += calibrated ? (s.cal_upper - s.cal_lower) : (s.upper - s.lower);
  return w / double(fc.steps.size());
}

}  // namespace

TEST_CASE("name parsing") {
  CHECK(pipeline::parse_rule("mqr") == pipeline::Rule::Mqr);
  CHECK(pipeline::parse_rule("qr") == pipeline::Rule::Qr);
  CHECK(pipeline::parse_rule("cp") == pipeline::Rule::Cp);
  CHECK(pipeline::parse_rule("naive") == pipeline::Rule::Naive);
  CHECK_THROWS_AS(pipeline::parse_rule("nope"), ConfigError);
  CHECK(pipeline::parse_conformity("all_bounds") ==
        pipeline::Conformity::AllBounds);
  CHECK(pipeline::parse_conformity("point_only") ==
        pipeline::Conformity::PointOnly);
  CHECK_THROWS_AS(pipeline::parse_conformity("bounds"), ConfigError);
  CHECK(pipeline::parse_transform("spectral") ==
        pipeline::TransformKind::Spectral);
  CHECK(pipeline::parse_transform("identity") ==
        pipeline::TransformKind::Identity);
  CHECK_THROWS_AS(pipeline::parse_transform("dct"), ConfigError);
}

TEST_CASE("lower bound is the point reflected about the upper bound") {
  const std::vector<double> s = seasonal_ar(120, 5);
  ForecastConfig cfg;
  cfg.horizon = 6;
  cfg.seasonal_period = 12;
  const pipeline::Estimation est = pipeline::estimate_intervals(s, cfg, 48);
  REQUIRE(est.point.size() == 6);
  if (est.ordering_fixes == 0) {
    for (int t = 0; t < 6; ++t) {
      // e.g. point 10, upper 13 -> lower 7
      CHECK(est.lower[t] ==
            doctest::Approx(2.0 * est.point[t] - est.upper[t]));
      CHECK(est.point[t] - est.lower[t] ==
            doctest::Approx(est.upper[t] - est.point[t]));
    }
  }
  for (int t = 0; t < 6; ++t) {
    CHECK(est.lower[t] <= est.point[t] + 1e-9);
    CHECK(est.point[t] <= est.upper[t] + 1e-9);
  }
}

TEST_CASE("seasonal series get positive-width intervals around the point") {
  const std::vector<double> s = seasonal_ar(120, 11);
  ForecastConfig cfg;
  cfg.horizon = 6;
  cfg.seasonal_period = 12;
  Forecast fc = pipeline::forecast_series(s, cfg);
  REQUIRE(int(fc.steps.size()) == 6);
  CHECK(fc.calibrated);
  CHECK(fc.delta >= 0.0);
  for (const IntervalStep& st : fc.steps) {
    CHECK(st.upper - st.lower > 0.0);
    CHECK(st.lower <= st.point);
    CHECK(st.point <= st.upper);
    CHECK(st.cal_lower == doctest::Approx(st.lower - fc.delta));
    CHECK(st.cal_upper == doctest::Approx(st.upper + fc.delta));
  }
  CHECK(std::isfinite(fc.obs_fit_rmse));
}

TEST_CASE("constant series produce zero-width intervals end to end") {
  const std::vector<double> s(60, 50.0);
  ForecastConfig cfg;
  cfg.horizon = 5;
  Forecast fc = pipeline::forecast_series(s, cfg);
  REQUIRE(int(fc.steps.size()) == 5);
  CHECK(fc.calibrated);
  CHECK(fc.delta <= 1e-4);
  for (const IntervalStep& st : fc.steps) {
    CHECK(st.point == doctest::Approx(50.0).epsilon(1e-4));
    CHECK(st.cal_upper - st.cal_lower <= 1e-4);
    CHECK(st.upper - st.lower <= 1e-4);
  }
}

TEST_CASE("tighter alpha cannot shrink the intervals") {
  const std::vector<double> s = seasonal_ar(120, 23);
  ForecastConfig strict;
  strict.horizon = 6;
  strict.seasonal_period = 12;
  strict.alpha = 0.05;
  ForecastConfig loose = strict;
  loose.alpha = 0.20;
  Forecast f_strict = pipeline::forecast_series(s, strict);
  Forecast f_loose = pipeline::forecast_series(s, loose);
  CHECK(mean_width(f_strict, false) >= mean_width(f_loose, false) - 1e-9);
  CHECK(mean_width(f_strict, true) >= mean_width(f_loose, true) - 1e-9);
}

TEST_CASE("repeat runs are bit-identical") {
  const std::vector<double> s = seasonal_ar(100, 39);
  ForecastConfig cfg;
  cfg.horizon = 4;
  cfg.seasonal_period = 12;
  Forecast a = pipeline::forecast_series(s, cfg);
  Forecast b = pipeline::forecast_series(s, cfg);
  REQUIRE(a.steps.size() == b.steps.size());
  CHECK(a.delta == b.delta);
  for (size_t t = 0; t < a.steps.size(); ++t) {
    CHECK(a.steps[t].lower == b.steps[t].lower);
    CHECK(a.steps[t].point == b.steps[t].point);
    CHECK(a.steps[t].upper == b.steps[t].upper);
    CHECK(a.steps[t].cal_lower == b.steps[t].cal_lower);
    CHECK(a.steps[t].cal_upper == b.steps[t].cal_upper);
  }
}

TEST_CASE("short series skip calibration with a warning") {
  const std::vector<double> s = seasonal_ar(16, 2, 4);
  ForecastConfig cfg;
  cfg.horizon = 5;  // needs l - h >= 2h + 2 = 12, but 16 - 5 = 11
  Forecast fc = pipeline::forecast_series(s, cfg);
  CHECK_FALSE(fc.calibrated);
  CHECK(fc.delta == 0.0);
  REQUIRE_FALSE(fc.warnings.empty());
  bool mentions = false;
  for (const std::string& w : fc.warnings)
    mentions = mentions || w.find("alibration") != std::string::npos;
  CHECK(mentions);
  for (const IntervalStep& st : fc.steps) {
    CHECK(st.cal_lower == st.lower);
    CHECK(st.cal_upper == st.upper);
  }
}

TEST_CASE("cp rule collapses the preliminary interval onto the point") {
  const std::vector<double> s = seasonal_ar(120, 8);
  ForecastConfig cfg;
  cfg.horizon = 6;
  cfg.seasonal_period = 12;
  cfg.rule = pipeline::Rule::Cp;
  Forecast fc = pipeline::forecast_series(s, cfg);
  CHECK(fc.calibrated);
  CHECK(fc.delta > 0.0);  // noisy series: point residuals are nonzero
  for (const IntervalStep& st : fc.steps) {
    CHECK(st.lower == st.point);
    CHECK(st.upper == st.point);
    CHECK(st.cal_upper - st.cal_lower == doctest::Approx(2.0 * fc.delta));
  }
}

TEST_CASE("naive rule defers to the seasonal baseline") {
  const std::vector<double> s = seasonal_ar(60, 13, 6);
  ForecastConfig cfg;
  cfg.horizon = 6;
  cfg.seasonal_period = 6;
  cfg.rule = pipeline::Rule::Naive;
  Forecast fc = pipeline::forecast_series(s, cfg);
  const baselines::NaiveIntervals ni =
      baselines::seasonal_naive_intervals(s, 6, cfg.alpha, 6);
  REQUIRE(int(fc.steps.size()) == 6);
  for (int t = 0; t < 6; ++t) {
    CHECK(fc.steps[t].point == ni.point[t]);
    CHECK(fc.steps[t].lower == ni.lower[t]);
    CHECK(fc.steps[t].upper == ni.upper[t]);
  }
}

TEST_CASE("identity transform path stays finite") {
  const std::vector<double> s = seasonal_ar(80, 44);
  ForecastConfig cfg;
  cfg.horizon = 4;
  cfg.transform = pipeline::TransformKind::Identity;
  Forecast fc = pipeline::forecast_series(s, cfg);
  for (const IntervalStep& st : fc.steps) {
    CHECK(std::isfinite(st.lower));
    CHECK(std::isfinite(st.upper));
    CHECK(st.lower <= st.point);
  }
}

TEST_CASE("config validation") {
  const std::vector<double> s = seasonal_ar(60, 3);
  ForecastConfig cfg;
  cfg.horizon = 0;
  CHECK_THROWS_AS(pipeline::forecast_series(s, cfg), ConfigError);
  cfg.horizon = 5;
  cfg.alpha = 0.0;
  CHECK_THROWS_AS(pipeline::forecast_series(s, cfg), ConfigError);
  cfg.alpha = 1.0;
  CHECK_THROWS_AS(pipeline::forecast_series(s, cfg), ConfigError);
  cfg.alpha = 0.05;
  cfg.model_size = 61;  // longer than the series
  CHECK_THROWS_AS(pipeline::forecast_series(s, cfg), ConfigError);
  cfg.model_size = 5;  // must exceed the horizon
  CHECK_THROWS_AS(pipeline::forecast_series(s, cfg), ConfigError);
  cfg.model_size = 0;
  cfg.seasonal_period = 0;
  CHECK_THROWS_AS(pipeline::forecast_series(s, cfg), ConfigError);
}
