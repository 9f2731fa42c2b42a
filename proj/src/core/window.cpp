#include "core/window.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace intervalcast {

int default_model_size(int series_length, int horizon, int seasonal_period) {
  if (series_length < 1 || horizon < 1)
    throw ConfigError("model size needs positive series length and horizon");
  int m = std::min(series_length, std::max(4 * horizon, 3 * seasonal_period));
  return std::max(m, horizon + 1);
}

Window make_window(const std::vector<double>& values, int horizon, int m) {
  if (horizon < 1) throw ConfigError("horizon must be positive");
  if (m <= horizon)
    throw ConfigError("model size must exceed the horizon");
  const int obs = m - horizon;
  if (static_cast<int>(values.size()) < obs)
    throw ConfigError("series too short for requested model size");
  Window w;
  w.horizon = horizon;
  w.values = Vec::Zero(m);
  w.observed.assign(m, false);
  const int start = static_cast<int>(values.size()) - obs;
  for (int i = 0; i < obs; ++i) {
    w.values[i] = values[start + i];
    w.observed[i] = true;
  }
  return w;
}

double observed_mean(const Window& w) {
  double sum = 0.0;
  int n = 0;
  for (int i = 0; i < w.values.size(); ++i)
    if (w.observed[i]) {
      sum += w.values[i];
      ++n;
    }
  if (n == 0) throw ConfigError("window has no observed entries");
  return sum / n;
}

}  // namespace intervalcast
