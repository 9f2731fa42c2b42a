#include "pipeline/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "baselines/baselines.hpp"
#include "calibrate/calibrate.hpp"
#include "core/errors.hpp"
#include "core/window.hpp"
#include "transform/transform.hpp"

namespace intervalcast::pipeline {

Rule parse_rule(const std::string& name) {
  if (name == "mqr") return Rule::Mqr;
  if (name == "qr") return Rule::Qr;
  if (name == "cp") return Rule::Cp;
  if (name == "naive") return Rule::Naive;
  throw ConfigError("unknown rule: " + name);
}

Conformity parse_conformity(const std::string& name) {
  if (name == "all_bounds") return Conformity::AllBounds;
  if (name == "point_only") return Conformity::PointOnly;
  throw ConfigError("unknown conformity set: " + name);
}

TransformKind parse_transform(const std::string& name) {
  if (name == "spectral") return TransformKind::Spectral;
  if (name == "identity") return TransformKind::Identity;
  throw ConfigError("unknown transform: " + name);
}

static double rule_lambda_q(const ForecastConfig& cfg) {
  if (cfg.lambda_q > 0.0) return cfg.lambda_q;
  return cfg.rule == Rule::Qr ? 2.0 : 20.0;
}

static void validate(const ForecastConfig& cfg, int l) {
  if (cfg.horizon < 1) throw ConfigError("horizon must be positive");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
    throw ConfigError("alpha must lie in (0,1)");
  if (cfg.model_size > l)
    throw ConfigError("model size exceeds series length");
  if (cfg.model_size != 0 && cfg.model_size <= cfg.horizon)
    throw ConfigError("model size must exceed the horizon");
  if (cfg.seasonal_period < 1)
    throw ConfigError("seasonal period must be positive");
}

Estimation estimate_intervals(const std::vector<double>& series,
                              const ForecastConfig& cfg, int m) {
  const int l = static_cast<int>(series.size());
  const int h = cfg.horizon;
  if (m > l) throw ConfigError("model size exceeds series length");

  // An exactly constant observed window has a closed-form answer: constant
  // vectors are convolutionally rank-1, so the point forecast is the
  // constant and the exact quantile solution coincides with it (zero-width
  // band). Short-circuit it here: a noiseless window reaches primal
  // feasibility while mu is still tiny, and the solver would otherwise
  // stamp its transient quantile shift lambda_q/(mu k) onto the bounds.
  {
    double lo = series[l - (m - h)], hi = lo;
    for (int i = l - (m - h); i < l; ++i) {
      lo = std::min(lo, series[i]);
      hi = std::max(hi, series[i]);
    }
    if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) {
      Estimation est;
      est.point.assign(h, lo);
      est.lower = est.point;
      est.upper = est.point;
      return est;
    }
  }

  // Learn the transform on the training part only; never on the last h
  // values (they act as the calibration set in the outer pass). When the
  // training part is shorter than m, extend to the minimum learnable span.
  Mat A;
  if (cfg.transform == TransformKind::Spectral) {
    const int span = std::max(l - h, m);
    std::vector<double> trainwin(series.begin(), series.begin() + span);
    A = transform::learn_transform(trainwin, m).A;
  } else {
    A = transform::padded_identity(m);
  }

  const Window window = make_window(series, h, m);

  solver::ProxRule point_rule{solver::RuleKind::Mse, cfg.lambda_pt, 0.5};
  const solver::SolveResult point = solver::solve(window, A, point_rule, cfg.solver);

  Estimation est;
  est.point.assign(point.x.data() + (m - h), point.x.data() + m);
  if (cfg.rule == Rule::Cp) {
    // conformal-only baseline: no quantile solve, zero-width preliminary band
    est.lower = est.point;
    est.upper = est.point;
    est.obs_fit_rmse = point.obs_fit_rmse;
    return est;
  }

  solver::ProxRule upper_rule{cfg.rule == Rule::Qr ? solver::RuleKind::QrMedian
                                                   : solver::RuleKind::MqrMean,
                              rule_lambda_q(cfg), 1.0 - cfg.alpha / 2.0};
  const solver::SolveResult upper = solver::solve(window, A, upper_rule, cfg.solver);
  est.obs_fit_rmse = upper.obs_fit_rmse;

  est.upper.assign(upper.x.data() + (m - h), upper.x.data() + m);
  est.lower.resize(h);
  for (int t = 0; t < h; ++t) {
    est.lower[t] = 2.0 * est.point[t] - est.upper[t];
    if (est.upper[t] < est.point[t]) {
      est.upper[t] = est.point[t];
      est.lower[t] = est.point[t];
      ++est.ordering_fixes;
    }
  }
  return est;
}

static Forecast naive_forecast(const std::vector<double>& series,
                               const ForecastConfig& cfg) {
  const baselines::NaiveIntervals ni = baselines::seasonal_naive_intervals(
      series, cfg.horizon, cfg.alpha, cfg.seasonal_period);
  Forecast fc;
  fc.steps.resize(cfg.horizon);
  for (int t = 0; t < cfg.horizon; ++t) {
    IntervalStep& s = fc.steps[t];
    s.lower = s.cal_lower = ni.lower[t];
    s.point = ni.point[t];
    s.upper = s.cal_upper = ni.upper[t];
  }
  return fc;
}

Forecast forecast_series(const std::vector<double>& series,
                         const ForecastConfig& cfg) {
  const int l = static_cast<int>(series.size());
  const int h = cfg.horizon;
  validate(cfg, l);
  if (cfg.rule == Rule::Naive) return naive_forecast(series, cfg);

  const int m = cfg.model_size > 0
                    ? cfg.model_size
                    : default_model_size(l, h, cfg.seasonal_period);
  if (m > l) throw ConfigError("series too short for the default model size");

  const Estimation est = estimate_intervals(series, cfg, m);

  Forecast fc;
  fc.obs_fit_rmse = est.obs_fit_rmse;
  if (est.ordering_fixes > 0)
    fc.warnings.push_back("upper bound fell below the point forecast on " +
                          std::to_string(est.ordering_fixes) +
                          " step(s); clamped to zero width");

  double delta = 0.0;
  bool calibrated = false;
  if (cfg.calibrate) {
    if (l - h >= calibrate::min_trainable_length(h)) {
      const calibrate::Split split = calibrate::split_series(series, h);
      ForecastConfig inner = cfg;
      inner.calibrate = false;
      const int m_cal = std::min(m, static_cast<int>(split.train.size()));
      const Estimation cal_est = estimate_intervals(split.train, inner, m_cal);

      std::vector<double> scores;
      const bool point_only = cfg.conformity == Conformity::PointOnly ||
                              cfg.rule == Rule::Cp;
      scores.reserve(point_only ? h : 3 * h);
      for (int t = 0; t < h; ++t)
        scores.push_back(std::abs(split.calibration[t] - cal_est.point[t]));
      if (!point_only) {
        for (int t = 0; t < h; ++t)
          scores.push_back(std::abs(split.calibration[t] - cal_est.lower[t]));
        for (int t = 0; t < h; ++t)
          scores.push_back(std::abs(split.calibration[t] - cal_est.upper[t]));
      }
      delta = cfg.empirical_quantile
                  ? calibrate::compute_delta_empirical(scores, cfg.alpha)
                  : calibrate::compute_delta(scores, cfg.alpha);
      calibrated = true;
    } else {
      fc.warnings.push_back(
          "calibration skipped: training part shorter than the minimum "
          "trainable length");
    }
  }

  fc.steps.resize(h);
  for (int t = 0; t < h; ++t) {
    IntervalStep& s = fc.steps[t];
    s.lower = est.lower[t];
    s.point = est.point[t];
    s.upper = est.upper[t];
    s.cal_lower = est.lower[t] - delta;
    s.cal_upper = est.upper[t] + delta;
  }
  fc.delta = delta;
  fc.calibrated = calibrated;
  return fc;
}

}  // namespace intervalcast::pipeline
