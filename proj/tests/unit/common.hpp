#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "doctest.h"
#include "tfloc/lattice.hpp"
#include "tfloc/modulation.hpp"
#include "tfloc/rng.hpp"
#include "tfloc/verify.hpp"

namespace tfloc::test {

inline const double kPi = std::acos(-1.0);

// Desk-scale model shared by the suites.
inline LatticeSpec spec() { return LatticeSpec::with_defaults(1, 8); }
inline TorusGrid torus() { return TorusGrid(1, 49); }
inline Signal unit_window() { return make_window(WindowSpec::gaussian(), spec()); }

inline Signal random_signal(Rng& rng, int radius = 8) {
  return ensemble::gaussian_signal(spec(), rng, radius);
}

inline double max_dev(const Signal& a, const Signal& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace tfloc::test
