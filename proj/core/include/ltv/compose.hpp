#pragma once

#include "ltv/system.hpp"

namespace ltv {

/// Which system feeds which in a two-system chain.
enum class CascadeOrder { AB, BA };

/// A cascade materialized as a single higher-order system. `inner` carries
/// tabulated coefficients over the construction horizon and the derived
/// initial state; `first` feeds `second`.
struct CascadeSystem {
  LtvSystem inner;
  std::string first;
  std::string second;
};

/// Combine two first-order systems, `first` feeding `second`, into one
/// explicit second-order system on [0, K]. With first = (a1, a0, y0f) and
/// second = (b1, b0, y0s):
///
///   coefficient of y(k+2): a1(k) b1(k+1)
///   coefficient of y(k+1): a1(k) b0(k+1) + a0(k) b1(k)
///   coefficient of y(k):   a0(k) b0(k)
///   y(0) = y0s,  y(1) = (y0f - b0(0) y0s) / b1(0)
///
/// The reverse order is the same construction with the arguments swapped.
/// Both operands must be valid on [0, K+1] (the k+1 shift consumes one
/// step); the result's coefficients are tabulated on [0, K].
CascadeSystem cascade_first_order(const LtvSystem& first, const LtvSystem& second, long K);

/// Operational cascade: feed x through `first`, then its output through
/// `second`. Works for any orders and serves as the reference for the
/// explicit constructions above.
Signal cascade_chain(const LtvSystem& first, const LtvSystem& second, const Signal& x, long K);

/// Combine a first-order system A with a zero-order gain Z (coefficient b0,
/// nonzero on [0, K+1]) into a single first-order system.
///
///   order AB (A feeds Z): a1(k) b0(k+1) y(k+1) + a0(k) b0(k) y(k) = x(k),
///                         y(0) = y0A / b0(0)
///   order BA (Z feeds A): a1(k) b0(k)   y(k+1) + a0(k) b0(k) y(k) = x(k),
///                         y(0) = y0A
LtvSystem cascade_with_zero_order(const LtvSystem& A, const LtvSystem& Z, CascadeOrder order,
                                  long K);

}  // namespace ltv
