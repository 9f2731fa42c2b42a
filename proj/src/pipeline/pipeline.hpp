#pragma once

#include <string>
#include <vector>

#include "core/types.hpp"
#include "solver/admm.hpp"

namespace intervalcast::pipeline {

enum class Rule { Mqr, Qr, Cp, Naive };
enum class Conformity { AllBounds, PointOnly };
enum class TransformKind { Spectral, Identity };

Rule parse_rule(const std::string& name);
Conformity parse_conformity(const std::string& name);
TransformKind parse_transform(const std::string& name);

struct ForecastConfig {
  int horizon = 0;
  double alpha = 0.05;
  Rule rule = Rule::Mqr;
  Conformity conformity = Conformity::AllBounds;
  TransformKind transform = TransformKind::Spectral;
  int model_size = 0;      // 0 = min(l, max(4h, 3*seasonal_period))
  double lambda_pt = 1000.0;
  double lambda_q = 0.0;   // 0 = per-rule default: 20 (mqr), 2 (qr)
  bool calibrate = true;
  bool empirical_quantile = false;  // plain quantile instead of conformal rank
  int seasonal_period = 1;
  solver::SolverOpts solver;
};

// Preliminary (uncalibrated) intervals over the horizon plus solver
// diagnostics from the quantile run.
struct Estimation {
  std::vector<double> lower, point, upper;
  double obs_fit_rmse = 0.0;
  int ordering_fixes = 0;  // steps where the upper solve fell below the point
};

// Point forecast via the MSE rule, upper bound via the quantile rule at
// delta = 1 - alpha/2, lower bound by reflection 2*point - upper. The
// transform is learned on the training part of `series` only (first l - h
// values) and shared by both solves.
Estimation estimate_intervals(const std::vector<double>& series,
                              const ForecastConfig& cfg, int m);

// Full pipeline: preliminary estimation on the whole series, then a second
// estimation pass on the series minus its last h values to collect
// conformity scores, and conformal widening by their (1-alpha) quantile.
Forecast forecast_series(const std::vector<double>& series,
                         const ForecastConfig& cfg);

}  // namespace intervalcast::pipeline
