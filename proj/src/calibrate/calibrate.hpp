#pragma once

#include <vector>

namespace intervalcast::calibrate {

// Minimum training length required before the series is split for
// calibration; shorter series skip calibration with delta = 0.
int min_trainable_length(int horizon);

struct Split {
  std::vector<double> train;        // first l - h values
  std::vector<double> calibration;  // last h values
};

// Splits off the last `horizon` values as the calibration set. Pure index
// arithmetic: throws CalibrationError only when there is nothing left to
// train on (l <= horizon). Whether the training part is long enough to be
// worth calibrating is the caller's policy, via min_trainable_length.
Split split_series(const std::vector<double>& values, int horizon);

// Finite-sample conformal quantile: the ceil((n+1)(1-alpha))-th smallest
// score, clamped to the maximum when the rank exceeds n.
double compute_delta(const std::vector<double>& scores, double alpha);

// Plain empirical quantile variant (rank ceil(n(1-alpha))), kept behind a
// flag for ablation.
double compute_delta_empirical(const std::vector<double>& scores, double alpha);

// Widen [lower, upper] by delta on each side; points are untouched.
void calibrate_intervals(std::vector<double>& lower, std::vector<double>& upper,
                         double delta);

}  // namespace intervalcast::calibrate
