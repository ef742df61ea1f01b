#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ltv/commute.hpp"
#include "ltv/compose.hpp"
#include "ltv/equivalence.hpp"
#include "ltv/system.hpp"

namespace testutil {

// Independent solution oracle: a literal transcription of the forward
// recursion over raw vectors and coefficient callbacks. Deliberately shares
// no code with ltv::simulate so the two can check each other.
inline std::vector<double> recursion_oracle(int order,
                                            const std::function<double(int, long)>& coeff,
                                            const std::vector<double>& initial,
                                            const std::vector<double>& x, long K) {
  std::vector<double> y(static_cast<std::size_t>(K) + 1, 0.0);
  if (order == 0) {
    for (long k = 0; k <= K; ++k) y[k] = x[k] / coeff(0, k);
    return y;
  }
  for (int i = 0; i < order; ++i) y[i] = initial[i];
  for (long k = 0; k + order <= K; ++k) {
    double acc = x[k];
    for (int i = 0; i < order; ++i) acc -= coeff(i, k) * y[k + i];
    y[k + order] = acc / coeff(order, k);
  }
  return y;
}

// The demo filter pair shipped as the example1 scenario.
inline ltv::LtvSystem demo_a(double y0) {
  return ltv::LtvSystem::first_order(ltv::CoefficientSequence::closed_form("exp(k)"),
                                     ltv::CoefficientSequence::closed_form("(k+1)^2"), y0, "A");
}
// Commutative pair of demo_a picked by c1=2, c0=1.
inline ltv::LtvSystem demo_b(double y0) {
  return ltv::LtvSystem::first_order(ltv::CoefficientSequence::closed_form("2*exp(k)"),
                                     ltv::CoefficientSequence::closed_form("2*k^2 + 4*k + 1"), y0,
                                     "B");
}
// Detuned variant (c0=3): coefficient conditions hold, the nonzero-state
// initial-condition constraint does not.
inline ltv::LtvSystem demo_b_detuned(double y0) {
  return ltv::LtvSystem::first_order(ltv::CoefficientSequence::closed_form("2*exp(k)"),
                                     ltv::CoefficientSequence::closed_form("2*k^2 + 4*k + 3"), y0,
                                     "B'");
}

// The modulator pair shipped as the example2 scenario.
inline ltv::LtvSystem modulator_a() {
  return ltv::LtvSystem::first_order(ltv::CoefficientSequence::constant(10.0),
                                     ltv::CoefficientSequence::closed_form("9 + 3*sin(0.1*pi*k)"),
                                     0.0, "A");
}
inline ltv::LtvSystem modulator_b() {
  return ltv::LtvSystem::first_order(ltv::CoefficientSequence::constant(30.0),
                                     ltv::CoefficientSequence::closed_form("8 + 9*sin(0.1*pi*k)"),
                                     0.0, "B");
}

// Degree-<=2 polynomial in k, tabulated on [0, table_horizon]. Leading
// system coefficients use sign * (min_abs + nonnegative terms) so they are
// bounded away from zero at every k >= 0.
inline ltv::CoefficientSequence random_bounded_poly(ltv::Rng& rng, long table_horizon,
                                                    double min_abs) {
  const double sign = rng.sign();
  const double c0 = min_abs + rng.uniform(0.0, 1.5);
  const double c1 = rng.uniform(0.0, 0.3);
  const double c2 = rng.uniform(0.0, 0.05);
  std::vector<double> v(static_cast<std::size_t>(table_horizon) + 1);
  for (long k = 0; k <= table_horizon; ++k) {
    const double kk = static_cast<double>(k);
    v[k] = sign * (c0 + c1 * kk + c2 * kk * kk);
  }
  return ltv::CoefficientSequence::tabulated(std::move(v));
}

inline ltv::CoefficientSequence random_free_poly(ltv::Rng& rng, long table_horizon) {
  const double c0 = rng.uniform(-1.0, 1.0);
  const double c1 = rng.uniform(-1.0, 1.0);
  const double c2 = rng.uniform(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(table_horizon) + 1);
  for (long k = 0; k <= table_horizon; ++k) {
    const double kk = static_cast<double>(k);
    v[k] = c0 + c1 * kk + c2 * kk * kk;
  }
  return ltv::CoefficientSequence::tabulated(std::move(v));
}

inline ltv::LtvSystem random_first_order(ltv::Rng& rng, long table_horizon, double min_leading,
                                         double y0, const std::string& label) {
  return ltv::LtvSystem::first_order(random_bounded_poly(rng, table_horizon, min_leading),
                                     random_free_poly(rng, table_horizon), y0, label);
}

inline ltv::LtvSystem random_system(ltv::Rng& rng, int order, long table_horizon,
                                    double min_leading, bool nonzero_state,
                                    const std::string& label) {
  std::vector<ltv::CoefficientSequence> coeffs;
  for (int i = 0; i < order; ++i) coeffs.push_back(random_free_poly(rng, table_horizon));
  coeffs.push_back(random_bounded_poly(rng, table_horizon, min_leading));
  std::vector<double> state(static_cast<std::size_t>(order));
  for (double& v : state) {
    v = nonzero_state ? rng.sign() * rng.uniform(0.5, 2.0) : rng.uniform(-2.0, 2.0);
  }
  return ltv::LtvSystem(std::move(coeffs), std::move(state), label);
}

inline ltv::Signal random_signal(ltv::Rng& rng, long K, double lo = -1.0, double hi = 1.0) {
  std::vector<double> v(static_cast<std::size_t>(K) + 1);
  for (double& s : v) s = rng.uniform(lo, hi);
  return ltv::Signal(std::move(v));
}

// Copy a system with one tabulated coefficient entry replaced.
inline ltv::LtvSystem with_table_entry(const ltv::LtvSystem& sys, int i, long k, double value,
                                       long table_horizon) {
  std::vector<ltv::CoefficientSequence> coeffs;
  for (int j = 0; j <= sys.order(); ++j) {
    std::vector<double> table = sys.coeff(j).tabulate(table_horizon);
    if (j == i) table[static_cast<std::size_t>(k)] = value;
    coeffs.push_back(ltv::CoefficientSequence::tabulated(std::move(table)));
  }
  return ltv::LtvSystem(std::move(coeffs), sys.initial_state(), sys.label() + "*");
}

}  // namespace testutil
