#include "ltv/equivalence.hpp"

#include <cmath>
#include <string>

namespace ltv {

namespace {

int require_same_order(const LtvSystem& s1, const LtvSystem& s2) {
  if (s1.order() != s2.order()) {
    throw InvalidArgument("cannot compare systems of different order (" +
                          std::to_string(s1.order()) + " vs " + std::to_string(s2.order()) + ")");
  }
  return s1.order();
}

}  // namespace

EquivalenceReport zero_state_equivalent(const LtvSystem& s1, const LtvSystem& s2, long K,
                                        const Tolerance& tol) {
  const int n = require_same_order(s1, s2);
  validate(s1, K);
  validate(s2, K);

  EquivalenceReport report;
  report.mode = EquivalenceMode::ZeroState;
  report.verdict = true;
  for (long k = 0; k <= K && report.verdict; ++k) {
    for (int i = 0; i <= n; ++i) {
      if (k < static_cast<long>(n - i)) continue;  // exempt: couples only the zero initial state
      const double lhs = s1.coeff(i).at(k);
      const double rhs = s2.coeff(i).at(k);
      if (!coeff_equal(lhs, rhs, tol)) {
        report.verdict = false;
        report.first_violation = CoefficientViolation{static_cast<std::size_t>(i), k, lhs, rhs};
        break;
      }
    }
  }
  return report;
}

EquivalenceReport zero_input_scalar_multiple(const LtvSystem& s1, const LtvSystem& s2, long K,
                                             const Tolerance& tol) {
  const int n = require_same_order(s1, s2);
  validate(s1, K);
  validate(s2, K);

  EquivalenceReport report;
  report.mode = EquivalenceMode::ZeroInputScaling;
  report.verdict = true;
  report.alphas.reserve(static_cast<std::size_t>(K) + 1);
  for (long k = 0; k <= K; ++k) {
    const double alpha = s2.coeff(n).at(k) / s1.coeff(n).at(k);
    report.alphas.push_back(alpha);
    if (!report.verdict) continue;  // keep filling alphas, first violation already recorded
    for (int i = 0; i <= n; ++i) {
      const double scaled = alpha * s1.coeff(i).at(k);
      const double rhs = s2.coeff(i).at(k);
      if (!coeff_equal(scaled, rhs, tol)) {
        report.verdict = false;
        report.first_violation = CoefficientViolation{static_cast<std::size_t>(i), k, scaled, rhs};
        break;
      }
    }
  }
  return report;
}

EquivalenceReport equivalent(const LtvSystem& s1, const LtvSystem& s2, long K,
                             const Tolerance& tol) {
  const int n = require_same_order(s1, s2);
  validate(s1, K);
  validate(s2, K);

  EquivalenceReport report;
  report.mode = EquivalenceMode::General;
  report.verdict = true;
  for (long k = 0; k <= K && report.verdict; ++k) {
    for (int i = 0; i <= n; ++i) {
      const double lhs = s1.coeff(i).at(k);
      const double rhs = s2.coeff(i).at(k);
      if (!coeff_equal(lhs, rhs, tol)) {
        report.verdict = false;
        report.first_violation = CoefficientViolation{static_cast<std::size_t>(i), k, lhs, rhs};
        break;
      }
    }
  }
  for (std::size_t i = 0; report.verdict && i < s1.initial_state().size(); ++i) {
    const double lhs = s1.initial_state()[i];
    const double rhs = s2.initial_state()[i];
    if (!coeff_equal(lhs, rhs, tol)) {
      report.verdict = false;
      report.state_violation = StateViolation{i, lhs, rhs};
    }
  }
  return report;
}

EquivalenceReport simulated_equivalent(const LtvSystem& s1, const LtvSystem& s2, int trials,
                                       long K, std::uint64_t seed, bool zero_input,
                                       const Tolerance& tol) {
  const int n = require_same_order(s1, s2);
  if (trials < 1) throw InvalidArgument("simulated equivalence needs at least one trial");

  EquivalenceReport report;
  report.mode = EquivalenceMode::Simulated;
  report.verdict = true;
  Rng rng(seed);
  for (int trial = 0; trial < trials && report.verdict; ++trial) {
    Signal x = Signal::zeros(K);
    LtvSystem sys1 = s1;
    LtvSystem sys2 = s2;
    if (zero_input) {
      // shared random initial state: zero-input equivalence quantifies over states
      std::vector<double> state(static_cast<std::size_t>(n));
      for (double& v : state) v = rng.uniform(-2.0, 2.0);
      sys1 = s1.with_initial_state(state);
      sys2 = s2.with_initial_state(state);
    } else {
      std::vector<double> samples(static_cast<std::size_t>(K) + 1);
      for (double& v : samples) v = rng.uniform(-1.0, 1.0);
      x = Signal(std::move(samples));
    }
    const Signal y1 = simulate(sys1, x, K);
    const Signal y2 = simulate(sys2, x, K);
    for (long k = 0; k <= K; ++k) {
      if (!approx_equal(y1[k], y2[k], tol)) {
        report.verdict = false;
        report.divergence = SimulatedDivergence{trial, k, y1[k], y2[k]};
        break;
      }
    }
  }
  return report;
}

}  // namespace ltv
