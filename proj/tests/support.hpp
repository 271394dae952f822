#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "hyperlap/errors.hpp"

namespace test {

using hyperlap::Complex;

inline double rel_err(Complex got, Complex want) {
  const double scale = std::abs(want);
  return scale == 0.0 ? std::abs(got) : std::abs(got - want) / scale;
}

/// Fixed-seed generator so failures reproduce.
class Draw {
 public:
  explicit Draw(unsigned seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex complex(double lo, double hi, double im) { return {uniform(lo, hi), uniform(-im, im)}; }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace test
