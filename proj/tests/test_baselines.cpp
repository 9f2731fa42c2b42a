#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "baselines/baselines.hpp"
#include "core/errors.hpp"
#include "data/rng.hpp"

using namespace intervalcast;
using baselines::inverse_normal_cdf;
using baselines::seasonal_naive_intervals;

TEST_CASE("inverse normal cdf hits textbook quantiles") {
  CHECK(std::abs(inverse_normal_cdf(0.5)) < 1e-8);
  CHECK(inverse_normal_cdf(0.975) ==
        doctest::Approx(1.959963984540054).epsilon(1e-8));
  CHECK(inverse_normal_cdf(0.025) ==
        doctest::Approx(-1.959963984540054).epsilon(1e-8));
  CHECK(inverse_normal_cdf(0.841344746068543) ==
        doctest::Approx(1.0).epsilon(1e-7));
  CHECK(inverse_normal_cdf(0.99) ==
        doctest::Approx(2.326347874040841).epsilon(1e-8));
  CHECK_THROWS_AS(inverse_normal_cdf(0.0), ConfigError);
  CHECK_THROWS_AS(inverse_normal_cdf(1.0), ConfigError);
  CHECK_THROWS_AS(inverse_normal_cdf(-0.3), ConfigError);
}

TEST_CASE("periodic series forecast exactly with zero width") {
  const int m_seas = 6;
  std::vector<double> s;
  for (int t = 0; t < 36; ++t)
    s.push_back(3.0 + std::sin(2.0 * M_PI * (t % m_seas) / m_seas));
  baselines::NaiveIntervals iv = seasonal_naive_intervals(s, 9, 0.05, m_seas);
  REQUIRE(iv.point.size() == 9);
  for (int t = 0; t < 9; ++t) {
    const double truth = 3.0 + std::sin(2.0 * M_PI * ((36 + t) % m_seas) / m_seas);
    CHECK(iv.point[t] == doctest::Approx(truth));
    CHECK(iv.upper[t] - iv.lower[t] == doctest::Approx(0.0));
  }
}

TEST_CASE("constant series with unit period is flat and zero width") {
  std::vector<double> s(20, 7.5);
  baselines::NaiveIntervals iv = seasonal_naive_intervals(s, 4, 0.05, 1);
  for (int t = 0; t < 4; ++t) {
    CHECK(iv.point[t] == 7.5);
    CHECK(iv.lower[t] == 7.5);
    CHECK(iv.upper[t] == 7.5);
  }
}

TEST_CASE("interval width is non-decreasing in the step") {
  data::Rng rng(3);
  std::vector<double> s(60);
  for (double& v : s) v = 5.0 + rng.normal();
  for (int m_seas : {1, 4, 12}) {
    baselines::NaiveIntervals iv = seasonal_naive_intervals(s, 10, 0.05, m_seas);
    for (int t = 1; t < 10; ++t)
      CHECK(iv.upper[t] - iv.lower[t] >=
            iv.upper[t - 1] - iv.lower[t - 1] - 1e-12);
  }
}

TEST_CASE("white-noise coverage matches the gaussian construction") {
  data::Rng rng(777);
  long covered = 0, total = 0;
  for (int rep = 0; rep < 500; ++rep) {
    std::vector<double> s(43);
    for (double& v : s) v = rng.normal();
    std::vector<double> future(s.end() - 3, s.end());
    s.resize(40);
    baselines::NaiveIntervals iv = seasonal_naive_intervals(s, 3, 0.05, 1);
    for (int t = 0; t < 3; ++t) {
      ++total;
      if (future[t] >= iv.lower[t] && future[t] <= iv.upper[t]) ++covered;
    }
  }
  const double cov = double(covered) / double(total);
  CHECK(cov >= 0.90);
  CHECK(cov <= 0.99);
}

TEST_CASE("baseline input validation") {
  std::vector<double> s(5, 1.0);
  CHECK_THROWS_AS(seasonal_naive_intervals(s, 3, 0.05, 5), ConfigError);
  CHECK_THROWS_AS(seasonal_naive_intervals(s, 0, 0.05, 1), ConfigError);
  CHECK_THROWS_AS(seasonal_naive_intervals(s, 3, 1.5, 1), ConfigError);
}
