#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ltv/system.hpp"

namespace ltv {

enum class EquivalenceMode { ZeroState, ZeroInputScaling, General, Simulated };

/// First failing coefficient comparison: smallest k, then smallest index.
struct CoefficientViolation {
  std::size_t index;
  long k;
  double lhs;
  double rhs;
};

/// First diverging simulated sample.
struct SimulatedDivergence {
  int trial;
  long k;
  double lhs;
  double rhs;
};

/// Mismatched initial-state entry (general equivalence only).
struct StateViolation {
  std::size_t position;
  double lhs;
  double rhs;
};

struct EquivalenceReport {
  bool verdict = false;
  EquivalenceMode mode = EquivalenceMode::General;
  std::optional<CoefficientViolation> first_violation;
  std::optional<StateViolation> state_violation;
  std::optional<SimulatedDivergence> divergence;
  /// Per-k scaling factors (ZeroInputScaling mode only).
  std::vector<double> alphas;
};

/// Zero-state equivalence: coefficients agree for every index i at every
/// k >= n - i. Entries at k < n - i only couple the (zero) initial state and
/// are exempt. Ignores the stored initial states.
EquivalenceReport zero_state_equivalent(const LtvSystem& s1, const LtvSystem& s2, long K,
                                        const Tolerance& tol = {});

/// Sufficient (not necessary) zero-input equivalence: the second system is a
/// per-step scalar multiple of the first, with alpha_k taken from the ratio
/// of leading coefficients. A false verdict does NOT rule out zero-input
/// equivalence; pair with simulated_equivalent for ground truth.
EquivalenceReport zero_input_scalar_multiple(const LtvSystem& s1, const LtvSystem& s2, long K,
                                             const Tolerance& tol = {});

/// General equivalence: identical coefficients at every k in [0, K] and an
/// identical initial state.
EquivalenceReport equivalent(const LtvSystem& s1, const LtvSystem& s2, long K,
                             const Tolerance& tol = {});

/// Simulation oracle: runs `trials` pseudorandom inputs (uniform in [-1, 1],
/// deterministic in `seed`) through both systems with their stored initial
/// states and compares outputs. With zero_input = true the input is held at
/// zero and both systems share a random initial state per trial instead.
EquivalenceReport simulated_equivalent(const LtvSystem& s1, const LtvSystem& s2, int trials,
                                       long K, std::uint64_t seed, bool zero_input = false,
                                       const Tolerance& tol = {});

}  // namespace ltv
