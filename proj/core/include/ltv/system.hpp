#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ltv/coefficient.hpp"
#include "ltv/signal.hpp"

namespace ltv {

/// Order-n discrete-time linear time-varying system
///
///   sum_{i=0}^{n} a_i(k) y(k+i) = x(k),   a_n(k) != 0 for all k >= 0,
///
/// with initial state y(0..n-1). Order 0 (a static gain) is permitted with
/// an empty initial state. Immutable after construction.
class LtvSystem {
 public:
  /// `coeffs[i]` multiplies y(k+i); `initial_state` holds y(0..n-1).
  LtvSystem(std::vector<CoefficientSequence> coeffs, std::vector<double> initial_state,
            std::string label);

  static LtvSystem first_order(CoefficientSequence a1, CoefficientSequence a0, double y0,
                               std::string label) {
    return LtvSystem({std::move(a0), std::move(a1)}, {y0}, std::move(label));
  }
  static LtvSystem zero_order(CoefficientSequence b0, std::string label) {
    return LtvSystem({std::move(b0)}, {}, std::move(label));
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const CoefficientSequence& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<CoefficientSequence>& coeffs() const { return coeffs_; }
  const CoefficientSequence& leading() const { return coeffs_.back(); }
  const std::vector<double>& initial_state() const { return initial_state_; }
  const std::string& label() const { return label_; }

  LtvSystem with_zero_state() const;
  LtvSystem with_initial_state(std::vector<double> state) const;
  LtvSystem relabeled(std::string label) const;

 private:
  std::vector<CoefficientSequence> coeffs_;
  std::vector<double> initial_state_;
  std::string label_;
};

/// Checks that the leading coefficient is nonzero and every coefficient is
/// finite on [0, K]. Throws LeadingCoefficientZero / NonFiniteCoefficient /
/// the underlying evaluation error.
void validate(const LtvSystem& sys, long K);

/// Exact response over [0, K] by the forward recursion
///
///   y(n+k) = ( x(k) - sum_{i<n} a_i(k) y(k+i) ) / a_n(k),
///
/// evaluated in strictly increasing k (bit-reproducible on one platform).
/// y(k) for k < n comes from the initial state; an order-0 system divides
/// pointwise: y(k) = x(k) / a_0(k). Requires K >= n and x of length >= K+1.
Signal simulate(const LtvSystem& sys, const Signal& x, long K);

/// Zero-state response to a unit sample at l: the system's stored initial
/// state is ignored.
Signal impulse_response(const LtvSystem& sys, long l, long K);

/// Convolution summation y(k) = sum_{l=0}^{k} x(l) h(k,l) for a causal
/// kernel h (h(k,l) = 0 for l > k, so the sum truncates at l = k).
Signal convolve(const std::function<double(long, long)>& h, const Signal& x, long K);

}  // namespace ltv
