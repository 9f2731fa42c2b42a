#include "baselines/baselines.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace intervalcast::baselines {

// Acklam's rational approximation for the normal quantile, followed by one
// Halley refinement against erfc, which brings the absolute error well
// below 1e-8 across (0,1).
double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw ConfigError("inverse_normal_cdf: p must lie in (0,1)");
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // Halley step: e = Phi(x) - p, u = e / phi(x)
  const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  return x - u / (1.0 + x * u / 2.0);
}

NaiveIntervals seasonal_naive_intervals(const std::vector<double>& series,
                                        int horizon, double alpha,
                                        int m_seas) {
  const int l = static_cast<int>(series.size());
  if (m_seas < 1) throw ConfigError("seasonal naive: period must be positive");
  if (horizon < 1) throw ConfigError("seasonal naive: horizon must be positive");
  if (l < m_seas + 1)
    throw ConfigError("seasonal naive: series shorter than one period plus one");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ConfigError("seasonal naive: alpha must lie in (0,1)");

  // in-sample one-step seasonal-naive residual spread
  double sq = 0.0;
  const int nres = l - m_seas;
  for (int t = m_seas; t < l; ++t) {
    const double r = series[t] - series[t - m_seas];
    sq += r * r;
  }
  const double sigma = std::sqrt(sq / nres);
  const double z = inverse_normal_cdf(1.0 - alpha / 2.0);

  NaiveIntervals out;
  out.lower.resize(horizon);
  out.point.resize(horizon);
  out.upper.resize(horizon);
  for (int s = 1; s <= horizon; ++s) {
    const double pt = series[l - m_seas + ((s - 1) % m_seas)];
    const double steps = std::ceil(static_cast<double>(s) / m_seas);
    const double half = z * sigma * std::sqrt(steps);
    out.point[s - 1] = pt;
    out.lower[s - 1] = pt - half;
    out.upper[s - 1] = pt + half;
  }
  return out;
}

}  // namespace intervalcast::baselines
