#include "ltv/robustness.hpp"

#include <algorithm>
#include <cmath>

namespace ltv {

RobustnessReport inject_and_compare(const LtvSystem& A, const LtvSystem& B, const Signal& x,
                                    const Signal& d, long K) {
  if (x.horizon() < K || d.horizon() < K) {
    throw InvalidArgument("input and disturbance must cover the horizon");
  }

  const Signal mid_ab = simulate(A, x, K);
  Signal clean_ab = simulate(B, mid_ab, K);
  Signal noisy_ab = simulate(B, mid_ab + d, K);

  const Signal mid_ba = simulate(B, x, K);
  Signal clean_ba = simulate(A, mid_ba, K);
  Signal noisy_ba = simulate(A, mid_ba + d, K);

  Signal dev_ab = noisy_ab - clean_ab;
  Signal dev_ba = noisy_ba - clean_ba;

  RobustnessReport report{std::move(clean_ab), std::move(noisy_ab),
                          std::move(clean_ba), std::move(noisy_ba),
                          std::move(dev_ab),   std::move(dev_ba)};
  report.min_ab = report.deviation_ab.min_value();
  report.max_ab = report.deviation_ab.max_value();
  report.min_ba = report.deviation_ba.min_value();
  report.max_ba = report.deviation_ba.max_value();
  report.max_abs_ab = report.deviation_ab.max_abs();
  report.max_abs_ba = report.deviation_ba.max_abs();
  if (approx_equal(report.max_abs_ab, report.max_abs_ba)) {
    report.winner = CascadeWinner::Tie;
  } else {
    report.winner = report.max_abs_ab < report.max_abs_ba ? CascadeWinner::AB : CascadeWinner::BA;
  }
  return report;
}

ImpulseRatio impulse_ratio(const LtvSystem& A, const LtvSystem& B, long l, long K) {
  if (l < 0 || l >= K) throw InvalidArgument("impulse position must satisfy 0 <= l < K");
  const Signal ha = impulse_response(A, l, K);
  const Signal hb = impulse_response(B, l, K);

  ImpulseRatio out;
  out.l = l;
  out.first_k = l + 1;
  out.ratios.reserve(static_cast<std::size_t>(K - l));
  for (long k = l + 1; k <= K; ++k) {
    if (hb[k] == 0.0) {
      out.ratios.emplace_back(std::nullopt);
    } else {
      out.ratios.emplace_back(ha[k] / hb[k]);
    }
  }
  return out;
}

Signal pulse_train(double amplitude, long period, double duty, long K) {
  if (period < 1) throw InvalidArgument("pulse period must be positive");
  if (!(duty > 0.0) || duty > 1.0) throw InvalidArgument("duty must lie in (0, 1]");
  std::vector<double> v(static_cast<std::size_t>(K) + 1, 0.0);
  for (long k = 0; k <= K; ++k) {
    if (static_cast<double>(k % period) < duty * static_cast<double>(period)) {
      v[static_cast<std::size_t>(k)] = amplitude;
    }
  }
  return Signal(std::move(v));
}

namespace {

// Shared structure of both closed forms: sign and exponential decay
//   (-1)^(k-l-1) * e^(-(k^2 - l^2 + l - k)/2)
double sign_and_decay(long k, long l) {
  const long steps = k - l - 1;
  const double sign = (steps % 2 == 0) ? 1.0 : -1.0;
  const double exponent = -static_cast<double>(k * k - l * l + l - k) / 2.0;
  return sign * std::exp(exponent);
}

}  // namespace

double example1_impulse_a(long k, long l) {
  if (k < 0 || l < 0) throw InvalidArgument("impulse response indices must be nonnegative");
  if (k <= l) return 0.0;
  if (k == l + 1) return std::exp(static_cast<double>(-l));
  double product = 1.0;
  for (long i = 1; i <= k - l - 1; ++i) {
    const double term = static_cast<double>(k - i + 1);
    product *= term * term;
  }
  return sign_and_decay(k, l) * product;
}

double example1_impulse_b(long k, long l) {
  if (k < 0 || l < 0) throw InvalidArgument("impulse response indices must be nonnegative");
  if (k <= l) return 0.0;
  if (k == l + 1) return 0.5 * std::exp(static_cast<double>(-l));
  double product = 1.0;
  for (long i = 1; i <= k - l - 1; ++i) {
    const double term = static_cast<double>(k - i + 1);
    product *= term * term + 0.5;
  }
  // constant 1/2 from the first step's leading coefficient; the per-step
  // factors of 2 in numerator and denominator cancel
  return 0.5 * sign_and_decay(k, l) * product;
}

double modulation_index(const Signal& s, long k_begin, long k_end, long period) {
  if (period < 1) throw InvalidArgument("carrier period must be positive");
  if (k_begin < 0 || k_end > s.horizon() || k_begin > k_end) {
    throw InvalidArgument("envelope window outside the signal");
  }
  double e_min = 0.0, e_max = 0.0;
  long windows = 0;
  for (long start = k_begin; start + period - 1 <= k_end; start += period) {
    double peak = s[start];
    for (long k = start + 1; k < start + period; ++k) peak = std::max(peak, s[k]);
    if (windows == 0) {
      e_min = e_max = peak;
    } else {
      e_min = std::min(e_min, peak);
      e_max = std::max(e_max, peak);
    }
    ++windows;
  }
  if (windows < 2) throw InvalidArgument("need at least two complete carrier periods");
  if (e_max + e_min == 0.0) throw DomainError("degenerate envelope: peaks sum to zero");
  return (e_max - e_min) / (e_max + e_min);
}

}  // namespace ltv
