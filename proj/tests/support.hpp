#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "specfun/types.hpp"

namespace testing {

using specfun::Complex;

// Same draw construction as the verify suites so sequences are portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
    const double re = uniform(re_lo, re_hi);
    return {re, uniform(im_lo, im_hi)};
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(uniform(0.0, 1.0) * (hi - lo + 1)); }

 private:
  std::mt19937_64 gen_;
};

inline double rel_err(Complex computed, Complex reference, double floor = 1e-300) {
  const double d = std::abs(computed - reference);
  const double scale = std::max(std::abs(reference), floor);
  return scale == 0.0 ? d : d / scale;
}

}  // namespace testing
