#pragma once

#include <vector>

namespace intervalcast::baselines {

// Standard normal quantile function (rational approximation, absolute
// error below 1e-8 on (0,1)).
double inverse_normal_cdf(double p);

struct NaiveIntervals {
  std::vector<double> lower;
  std::vector<double> point;
  std::vector<double> upper;
};

// Seasonal-naive point forecast with Gaussian intervals. Point forecasts
// repeat the last seasonal cycle; the half-width grows with the number of
// seasonal steps ahead, scaled by the in-sample std of seasonal-naive
// residuals.
NaiveIntervals seasonal_naive_intervals(const std::vector<double>& series,
                                        int horizon, double alpha, int m_seas);

}  // namespace intervalcast::baselines
