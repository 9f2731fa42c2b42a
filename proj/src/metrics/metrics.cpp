#include "metrics/metrics.hpp"

#include <cmath>
#include <cstddef>

#include "core/errors.hpp"

namespace intervalcast::metrics {

double msis(const std::vector<double>& insample,
            const std::vector<double>& truth,
            const std::vector<double>& lower,
            const std::vector<double>& upper, double alpha, int m_seas) {
  const int n = static_cast<int>(insample.size());
  const int h = static_cast<int>(truth.size());
  if (m_seas < 1) throw MetricError("msis: seasonal period must be positive");
  if (n <= m_seas)
    throw MetricError("msis: in-sample shorter than one seasonal lag");
  if (h < 1 || lower.size() != truth.size() || upper.size() != truth.size())
    throw MetricError("msis: mismatched interval shapes");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw MetricError("msis: alpha must lie in (0,1)");

  double denom = 0.0;
  for (int t = m_seas; t < n; ++t)
    denom += std::abs(insample[t] - insample[t - m_seas]);
  denom /= (n - m_seas);
  if (!(denom > 0.0)) throw MetricError("degenerate scale");

  double acc = 0.0;
  const double pen = 2.0 / alpha;
  for (int t = 0; t < h; ++t) {
    acc += upper[t] - lower[t];
    if (truth[t] < lower[t]) acc += pen * (lower[t] - truth[t]);
    if (truth[t] > upper[t]) acc += pen * (truth[t] - upper[t]);
  }
  return acc / h / denom;
}

long count_covered(const std::vector<double>& truth,
                   const std::vector<double>& lower,
                   const std::vector<double>& upper) {
  long covered = 0;
  for (std::size_t t = 0; t < truth.size(); ++t)
    if (truth[t] >= lower[t] && truth[t] <= upper[t]) ++covered;
  return covered;
}

double coverage(const std::vector<IntervalBatch>& batches) {
  long covered = 0, total = 0;
  for (const auto& b : batches) {
    covered += count_covered(b.truth, b.lower, b.upper);
    total += static_cast<long>(b.truth.size());
  }
  if (total == 0) throw MetricError("coverage: no forecast points");
  return static_cast<double>(covered) / static_cast<double>(total);
}

double acd(double coverage, double target) {
  return std::abs(target - coverage);
}

}  // namespace intervalcast::metrics
