#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace intervalcast::data {

// Deterministic RNG for synthetic corpora and sampling. Uniform and normal
// draws are derived from raw mt19937_64 output, avoiding the
// implementation-defined std::*_distribution algorithms so the same seed
// yields the same corpus on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform in [0, 1)
  double unit() { return (gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // integer in [lo, hi)
  int integers(int lo, int hi) {
    return lo + static_cast<int>(unit() * (hi - lo));
  }

  // standard normal via Box-Muller with one cached partner draw
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = ((gen_() >> 11) + 1) * 0x1.0p-53;  // in (0, 1]
    const double u2 = unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace intervalcast::data
