#pragma once

#include <vector>

#include "core/types.hpp"

namespace intervalcast {

// Modeling window over the tail of a series. The last `horizon` slots are
// the unobserved future; everything before them is observed history.
struct Window {
  Vec values;                  // length m; unobserved slots hold 0 until filled
  std::vector<bool> observed;  // length m; false on the trailing horizon
  int horizon = 0;
};

// Default model size: min(l, max(4h, 3*seasonal_period)), but always > h so
// at least one slot is observed.
int default_model_size(int series_length, int horizon, int seasonal_period);

// Build the window for forecasting `horizon` steps past the end of `values`.
// The observed part is the last (m - horizon) values of the series.
Window make_window(const std::vector<double>& values, int horizon, int m);

double observed_mean(const Window& w);

}  // namespace intervalcast
