#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace intervalcast {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Seasonal frequency tags mirroring the M4 dataset groups.
enum class Frequency { Hourly, Daily, Weekly, Monthly, Quarterly, Yearly };

struct FrequencyInfo {
  int horizon;
  int seasonal_period;
};

inline FrequencyInfo frequency_info(Frequency f) {
  switch (f) {
    case Frequency::Hourly:    return {48, 24};
    case Frequency::Daily:     return {14, 1};
    case Frequency::Weekly:    return {13, 1};
    case Frequency::Monthly:   return {18, 12};
    case Frequency::Quarterly: return {8, 4};
    case Frequency::Yearly:    return {6, 1};
  }
  return {6, 1};
}

struct Series {
  std::string id;
  std::vector<double> values;
  Frequency frequency = Frequency::Yearly;
};

struct Corpus {
  std::vector<Series> series;
};

// One interval forecast step. `lower`/`upper` are the estimation-phase
// bounds; `cal_lower`/`cal_upper` include the conformal widening.
struct IntervalStep {
  double lower = 0.0;
  double point = 0.0;
  double upper = 0.0;
  double cal_lower = 0.0;
  double cal_upper = 0.0;
};

struct Forecast {
  std::vector<IntervalStep> steps;
  double delta = 0.0;      // conformal adjustment actually applied
  bool calibrated = false;
  double obs_fit_rmse = 0.0;  // quantile-solve fit on the observed window
  std::vector<std::string> warnings;
};

}  // namespace intervalcast
