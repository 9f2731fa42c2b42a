#include "calibrate/calibrate.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace intervalcast::calibrate {

int min_trainable_length(int horizon) { return 2 * horizon + 2; }

Split split_series(const std::vector<double>& values, int horizon) {
  const int l = static_cast<int>(values.size());
  if (horizon < 1) throw ConfigError("split_series: horizon must be positive");
  if (l <= horizon)
    throw CalibrationError("series too short to hold out a calibration set");
  Split s;
  s.train.assign(values.begin(), values.end() - horizon);
  s.calibration.assign(values.end() - horizon, values.end());
  return s;
}

static double rank_score(const std::vector<double>& scores, int rank) {
  std::vector<double> sorted(scores);
  std::sort(sorted.begin(), sorted.end());
  const int n = static_cast<int>(sorted.size());
  return sorted[std::min(rank, n) - 1];
}

double compute_delta(const std::vector<double>& scores, double alpha) {
  if (scores.empty())
    throw CalibrationError("compute_delta: empty score set");
  const int n = static_cast<int>(scores.size());
  const int rank = static_cast<int>(std::ceil((n + 1) * (1.0 - alpha)));
  return rank_score(scores, std::max(rank, 1));
}

double compute_delta_empirical(const std::vector<double>& scores, double alpha) {
  if (scores.empty())
    throw CalibrationError("compute_delta: empty score set");
  const int n = static_cast<int>(scores.size());
  const int rank = static_cast<int>(std::ceil(n * (1.0 - alpha)));
  return rank_score(scores, std::max(rank, 1));
}

void calibrate_intervals(std::vector<double>& lower, std::vector<double>& upper,
                         double delta) {
  if (delta < 0.0) throw ConfigError("calibrate_intervals: delta must be >= 0");
  for (double& v : lower) v -= delta;
  for (double& v : upper) v += delta;
}

}  // namespace intervalcast::calibrate
