#pragma once

#include <vector>

namespace intervalcast::metrics {

// Mean scaled interval score: interval width plus (2/alpha)-weighted miss
// penalties averaged over the horizon, divided by the mean absolute
// seasonal difference of the in-sample values.
double msis(const std::vector<double>& insample,
            const std::vector<double>& truth,
            const std::vector<double>& lower,
            const std::vector<double>& upper, double alpha, int m_seas);

struct IntervalBatch {
  std::vector<double> truth;
  std::vector<double> lower;
  std::vector<double> upper;
};

// Number of truths falling inside the closed interval [lower, upper].
long count_covered(const std::vector<double>& truth,
                   const std::vector<double>& lower,
                   const std::vector<double>& upper);

// Pooled coverage over every (series, step) pair.
double coverage(const std::vector<IntervalBatch>& batches);

// Absolute coverage difference |target - achieved|.
double acd(double coverage, double target);

}  // namespace intervalcast::metrics
