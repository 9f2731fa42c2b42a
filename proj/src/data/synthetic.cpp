#include "data/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "core/errors.hpp"

namespace intervalcast::data {

std::vector<double> gen_ar1_seasonal(Rng& rng, int n, int seasonal_period,
                                     double noise, double rho, double amp,
                                     double trend, double level) {
  if (n < 1 || seasonal_period < 1)
    throw ConfigError("gen_ar1_seasonal: bad length or period");
  std::vector<double> e(n), x(n, 0.0);
  for (int i = 0; i < n; ++i) e[i] = rng.normal() * noise;
  for (int i = 1; i < n; ++i) x[i] = rho * x[i - 1] + e[i];
  const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  std::vector<double> out(n);
  for (int t = 0; t < n; ++t)
    out[t] = level + trend * t +
             amp * std::sin(2.0 * std::numbers::pi * t / seasonal_period + phase) +
             x[t];
  return out;
}

std::vector<double> gen_m4yearly(Rng& rng, int l, int h) {
  const int n = l + h;
  if (n < 2) throw ConfigError("gen_m4yearly: series too short");
  const double base = rng.uniform(500.0, 5000.0);
  const double slope = base * rng.uniform(-0.01, 0.04);
  const double curve = base * rng.uniform(-0.0003, 0.0006);
  const double sig = base * rng.uniform(0.01, 0.04);
  const double drift = rng.uniform(1.6, 2.6);
  std::vector<double> x(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double scale = sig * (1.0 + (drift - 1.0) * double(i) / n);
    const double e = rng.normal() * scale;
    if (i > 0) x[i] = 0.6 * x[i - 1] + e;
  }
  std::vector<double> out(n);
  for (int t = 0; t < n; ++t)
    out[t] = base + slope * t + curve * t * t / std::max(1, n) + x[t];
  return out;
}

M4Corpus make_seasonal_corpus(std::uint64_t seed, int n_series, int length,
                              int horizon, int seasonal_period) {
  Rng rng(seed);
  M4Corpus corpus;
  corpus.frequency = Frequency::Monthly;
  corpus.items.reserve(n_series);
  for (int s = 0; s < n_series; ++s) {
    const double amp = rng.uniform(2.0, 8.0);
    const std::vector<double> full = gen_ar1_seasonal(
        rng, length + horizon, seasonal_period, 2.0, 0.7, amp, 0.02, 50.0);
    M4Item item;
    item.id = "M" + std::to_string(s + 1);
    item.train.assign(full.begin(), full.begin() + length);
    item.test.assign(full.begin() + length, full.end());
    corpus.items.push_back(std::move(item));
  }
  return corpus;
}

M4Corpus make_yearly_corpus(std::uint64_t seed, int n_series) {
  Rng rng(seed);
  M4Corpus corpus;
  corpus.frequency = Frequency::Yearly;
  corpus.items.reserve(n_series);
  const int h = frequency_info(Frequency::Yearly).horizon;
  for (int s = 0; s < n_series; ++s) {
    const int l = rng.integers(24, 45);
    const std::vector<double> full = gen_m4yearly(rng, l, h);
    M4Item item;
    item.id = "Y" + std::to_string(s + 1);
    item.train.assign(full.begin(), full.begin() + l);
    item.test.assign(full.begin() + l, full.end());
    corpus.items.push_back(std::move(item));
  }
  return corpus;
}

}  // namespace intervalcast::data
