#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace ltv {

/// Comparison policy used throughout the library: relative tolerance with an
/// absolute floor. `exact` switches coefficient checks to bit equality.
struct Tolerance {
  double relative = 1e-9;
  double absolute = 1e-12;
  bool exact = false;
};

/// |a - b| <= max(abs_floor, rel * max(|a|, |b|)). Used for signals and
/// other quantities where zero is a legitimate value.
inline bool approx_equal(double a, double b, const Tolerance& tol = {}) {
  if (tol.exact) return a == b;
  const double diff = std::abs(a - b);
  return diff <= std::max(tol.absolute, tol.relative * std::max(std::abs(a), std::abs(b)));
}

/// Coefficient equality: |other - ref| <= rel * max(1, |ref|). Coefficients
/// of order one get a relative test, small ones an absolute one.
inline bool coeff_equal(double ref, double other, const Tolerance& tol = {}) {
  if (tol.exact) return ref == other;
  return std::abs(other - ref) <= tol.relative * std::max(1.0, std::abs(ref));
}

/// Deterministic uniform generator. The mapping from raw engine output to
/// doubles is spelled out here so sequences do not depend on the standard
/// library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// -1 or +1.
  double sign() { return (engine_() & 1u) ? 1.0 : -1.0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ltv
