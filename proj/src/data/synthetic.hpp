#pragma once

#include <cstdint>
#include <vector>

#include "data/data.hpp"
#include "data/rng.hpp"

namespace intervalcast::data {

// Level + linear trend + one seasonal sinusoid + AR(1) noise.
std::vector<double> gen_ar1_seasonal(Rng& rng, int n, int seasonal_period,
                                     double noise = 1.0, double rho = 0.7,
                                     double amp = 5.0, double trend = 0.05,
                                     double level = 50.0);

// Short yearly-style series: trend + mild curvature + AR(1) noise whose
// scale drifts upward over time (variance growth toward the forecast
// region). Returns l + h values.
std::vector<double> gen_m4yearly(Rng& rng, int l, int h);

// Monthly-style ensemble used by the coverage harness: fixed length,
// randomized seasonal amplitude per series.
M4Corpus make_seasonal_corpus(std::uint64_t seed, int n_series, int length = 144,
                              int horizon = 12, int seasonal_period = 12);

// Yearly-style ensemble used by the directional MQR-vs-QR harness:
// lengths drawn from [24, 45), horizon 6.
M4Corpus make_yearly_corpus(std::uint64_t seed, int n_series);

}  // namespace intervalcast::data
