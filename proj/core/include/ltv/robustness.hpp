#pragma once

#include <optional>
#include <vector>

#include "ltv/system.hpp"

namespace ltv {

enum class CascadeWinner { AB, BA, Tie };

/// Effect of a disturbance injected at the interconnection point, for both
/// cascade orders. The deviation is (noisy output - clean output); by
/// linearity it is the downstream system's zero-state response to the
/// disturbance alone.
struct RobustnessReport {
  Signal clean_ab;
  Signal noisy_ab;
  Signal clean_ba;
  Signal noisy_ba;
  Signal deviation_ab;
  Signal deviation_ba;
  double min_ab = 0.0, max_ab = 0.0;  // exact bounds of deviation_ab
  double min_ba = 0.0, max_ba = 0.0;
  double max_abs_ab = 0.0, max_abs_ba = 0.0;
  CascadeWinner winner = CascadeWinner::Tie;
};

/// Simulate both cascade orders of (A, B) on input x, then again with d
/// added at the interconnection: after A for order AB, after B for order BA.
/// The winner is the order with the smaller peak absolute deviation.
RobustnessReport inject_and_compare(const LtvSystem& A, const LtvSystem& B, const Signal& x,
                                    const Signal& d, long K);

/// h_A(k, l) / h_B(k, l) for k in [l+1, K] from simulated unit-sample
/// responses; entries where h_B(k, l) = 0 are left empty.
struct ImpulseRatio {
  long l = 0;
  long first_k = 0;  // ratios[j] corresponds to k = first_k + j
  std::vector<std::optional<double>> ratios;
};
ImpulseRatio impulse_ratio(const LtvSystem& A, const LtvSystem& B, long l, long K);

/// Rectangular disturbance: amplitude where (k mod period) < duty * period,
/// zero elsewhere. duty in (0, 1].
Signal pulse_train(double amplitude, long period, double duty, long K);

/// Closed-form unit-sample responses for the demo filter pair shipped as the
/// "example1" scenario: A with coefficients (e^k, (k+1)^2) and its detuned
/// pair B with (2 e^k, 2k^2 + 4k + 3). Useful as analytic cross-checks of
/// the simulated responses; the recursion remains the ground truth.
double example1_impulse_a(long k, long l);
double example1_impulse_b(long k, long l);

/// Modulation depth (E_max - E_min) / (E_max + E_min), where E_j are the
/// per-carrier-period peaks of s over complete windows of `period` samples
/// inside [k_begin, k_end]. Needs at least two complete windows.
double modulation_index(const Signal& s, long k_begin, long k_end, long period);

}  // namespace ltv
