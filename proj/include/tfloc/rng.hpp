#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "tfloc/lattice.hpp"

namespace tfloc {

/// 64-bit FNV-1a hash of a string.
std::uint64_t fnv1a(std::string_view s);

/// splitmix64 finaliser.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of an independent stream for (master seed, check id, trial index).
std::uint64_t stream_seed(std::uint64_t master, std::string_view id, std::uint64_t trial);

/// Portable random source: mt19937_64 with hand-rolled uniform and normal
/// transforms, so draws do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer uniform on [lo, hi].
  int integer(int lo, int hi);
  /// Standard normal (Box-Muller).
  double normal();
  /// Standard complex normal: E|z|^2 = 1.
  cplx complex_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tfloc
