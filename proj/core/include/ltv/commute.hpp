#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltv/compose.hpp"
#include "ltv/system.hpp"

namespace ltv {

/// The two free constants generating every first-order commutative pair of a
/// given system: b1(k) = c1 a1(k), b0(k) = c1 (a0(k) - a0(0)) + c0.
struct SynthesisConstants {
  double c0 = 0.0;
  double c1 = 1.0;  // must be nonzero
};

/// Constant feed-forward (alpha) and feedback (beta) gains wrapped around a
/// system to form its feedback conjugate.
struct FeedbackGains {
  double alpha = 1.0;  // must be nonzero
  double beta = 0.0;
};

/// A failed commutativity condition. `tag` names where the two cascade
/// orders disagree:
///   c0/c1/c2  coefficient of y(k) / y(k+1) / y(k+2) in the combined system
///   ic0/ic1   derived initial values y(0) / y(1)
///   zi0..zi2  the scaled zero-input comparisons
/// `residual` is (value in one order) - (value in the other).
struct ConditionViolation {
  std::string tag;
  long k;
  double residual;
};

/// Outcome of the pairwise condition checks for cascades AB vs BA.
struct CommutativityReport {
  /// Coefficient equality on the zero-state ranges: the y(k+2) coefficient
  /// for k >= 0, y(k+1) for k >= 1, y(k) for k >= 2.
  bool zero_state_ok = false;
  /// Coefficient equality at every k >= 0.
  bool general_ok = false;
  /// Derived initial conditions of AB and BA match (equal initial states and
  /// the cross-coupling equality at y(1)). Trivially true when the check runs
  /// without initial conditions.
  bool ic_constraint_ok = false;
  /// Sufficient zero-input condition: BA coefficients are alpha_k times AB's,
  /// with alpha_k the ratio of leading coefficients.
  bool zero_input_sufficient_ok = false;
  bool with_initial_conditions = false;
  std::optional<ConditionViolation> first_violation;
  /// alpha_k used by the zero-input check, one entry per k in [0, K].
  std::vector<double> zero_input_alphas;

  /// Overall verdict: coefficients commute everywhere, and the initial
  /// conditions match when they participate.
  bool verdict() const {
    return general_ok && (!with_initial_conditions || ic_constraint_ok);
  }
};

/// Evaluate all commutativity conditions for two first-order systems over
/// [0, K]. Both systems must be valid on [0, K+1].
CommutativityReport check_conditions(const LtvSystem& A, const LtvSystem& B, long K,
                                     bool with_initial_conditions, const Tolerance& tol = {});

/// Construct the commutative pair of A selected by (c0, c1), with initial
/// state y0 (pass A's own initial value; equal initial states are required
/// for commutativity with nonzero states). Coefficients stay closed-form
/// when A's are closed-form, otherwise they are tabulated on [0, K].
LtvSystem synthesize_pair(const LtvSystem& A, const SynthesisConstants& c, long K, double y0);

/// The unique c0 compatible with nonzero equal initial states:
/// c0 = 1 - c1 + c1 a0(0).
double required_c0(const LtvSystem& A, double c1);

struct FeedbackPairResult {
  LtvSystem system;
  /// Set when A's initial value is nonzero but beta != 1 - 1/alpha: the
  /// conjugate is still a valid system, but it will not commute with A.
  bool gain_constraint_warning = false;
};

/// Feedback conjugate of A: b1(k) = a1(k)/alpha, b0(k) = a0(k)/alpha + beta,
/// same initial value as A.
FeedbackPairResult feedback_pair(const LtvSystem& A, const FeedbackGains& g, long K);

/// The gains realizing a synthesized pair: alpha = 1/c1,
/// beta = c0 - c1 a0(0). feedback_pair(A, gains_from_constants(A, c)) and
/// synthesize_pair(A, c) produce the same coefficient tables.
FeedbackGains gains_from_constants(const LtvSystem& A, const SynthesisConstants& c);

/// Commutativity of a first-order system with a zero-order gain Z: requires
/// the gain b0 to be constant on [0, K+1], and to be exactly 1 when initial
/// conditions participate and A's initial value is nonzero.
CommutativityReport zero_order_commutes(const LtvSystem& A, const LtvSystem& Z, long K,
                                        bool with_initial_conditions, const Tolerance& tol = {});

}  // namespace ltv
