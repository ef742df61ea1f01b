#include "ltv/commute.hpp"

#include <cmath>

namespace ltv {

namespace {

void require_first_order(const LtvSystem& sys) {
  if (sys.order() != 1) {
    throw InvalidArgument("system '" + sys.label() + "' must be first-order, got order " +
                          std::to_string(sys.order()));
  }
}

// Records only the earliest violation: smallest k, then smallest coefficient
// index (the scan below visits them in that order).
void note_violation(CommutativityReport& report, const char* tag, long k, double lhs, double rhs) {
  if (!report.first_violation) {
    report.first_violation = ConditionViolation{tag, k, lhs - rhs};
  }
}

}  // namespace

CommutativityReport check_conditions(const LtvSystem& A, const LtvSystem& B, long K,
                                     bool with_initial_conditions, const Tolerance& tol) {
  require_first_order(A);
  require_first_order(B);
  if (K < 2) throw InvalidArgument("commutativity checks need a horizon of at least 2");
  validate(A, K + 1);
  validate(B, K + 1);

  const std::vector<double> a0 = A.coeff(0).tabulate(K + 1);
  const std::vector<double> a1 = A.coeff(1).tabulate(K + 1);
  const std::vector<double> b0 = B.coeff(0).tabulate(K + 1);
  const std::vector<double> b1 = B.coeff(1).tabulate(K + 1);

  CommutativityReport report;
  report.with_initial_conditions = with_initial_conditions;
  report.zero_state_ok = true;
  report.general_ok = true;
  report.zero_input_sufficient_ok = true;
  report.zero_input_alphas.reserve(static_cast<std::size_t>(K) + 1);
  std::optional<ConditionViolation> zi_first;

  for (long k = 0; k <= K; ++k) {
    const std::size_t j = static_cast<std::size_t>(k);
    // combined-system coefficients for the two orders
    const double c0_ab = a0[j] * b0[j];
    const double c0_ba = b0[j] * a0[j];
    const double c1_ab = a1[j] * b0[j + 1] + a0[j] * b1[j];
    const double c1_ba = b1[j] * a0[j + 1] + b0[j] * a1[j];
    const double c2_ab = a1[j] * b1[j + 1];
    const double c2_ba = b1[j] * a1[j + 1];

    const bool ok0 = coeff_equal(c0_ab, c0_ba, tol);
    const bool ok1 = coeff_equal(c1_ab, c1_ba, tol);
    const bool ok2 = coeff_equal(c2_ab, c2_ba, tol);

    if (!ok0) {
      report.general_ok = false;
      note_violation(report, "c0", k, c0_ab, c0_ba);
      if (k >= 2) report.zero_state_ok = false;
    }
    if (!ok1) {
      report.general_ok = false;
      note_violation(report, "c1", k, c1_ab, c1_ba);
      if (k >= 1) report.zero_state_ok = false;
    }
    if (!ok2) {
      report.general_ok = false;
      note_violation(report, "c2", k, c2_ab, c2_ba);
      report.zero_state_ok = false;
    }

    // sufficient zero-input condition: BA = alpha_k * AB, coefficientwise
    const double alpha = c2_ba / c2_ab;
    report.zero_input_alphas.push_back(alpha);
    if (report.zero_input_sufficient_ok) {
      const char* zi_tag = nullptr;
      double zi_lhs = 0.0, zi_rhs = 0.0;
      if (!std::isfinite(alpha) || !coeff_equal(alpha * c0_ab, c0_ba, tol)) {
        zi_tag = "zi0", zi_lhs = alpha * c0_ab, zi_rhs = c0_ba;
      } else if (!coeff_equal(alpha * c1_ab, c1_ba, tol)) {
        zi_tag = "zi1", zi_lhs = alpha * c1_ab, zi_rhs = c1_ba;
      } else if (!coeff_equal(alpha * c2_ab, c2_ba, tol)) {
        zi_tag = "zi2", zi_lhs = alpha * c2_ab, zi_rhs = c2_ba;
      }
      if (zi_tag) {
        report.zero_input_sufficient_ok = false;
        zi_first = ConditionViolation{zi_tag, k, zi_lhs - zi_rhs};
      }
    }
  }

  if (with_initial_conditions) {
    const double y0A = A.initial_state()[0];
    const double y0B = B.initial_state()[0];
    // derived initial values of the two cascades
    const double y1_ab = (y0A - b0[0] * y0B) / b1[0];
    const double y1_ba = (y0B - a0[0] * y0A) / a1[0];
    const bool ok_y0 = coeff_equal(y0B, y0A, tol);
    const bool ok_y1 = coeff_equal(y1_ab, y1_ba, tol);
    report.ic_constraint_ok = ok_y0 && ok_y1;
    if (!ok_y0) note_violation(report, "ic0", 0, y0B, y0A);
    else if (!ok_y1) note_violation(report, "ic1", 1, y1_ab, y1_ba);
  } else {
    report.ic_constraint_ok = true;
  }

  if (!report.first_violation && zi_first) report.first_violation = zi_first;
  return report;
}

LtvSystem synthesize_pair(const LtvSystem& A, const SynthesisConstants& c, long K, double y0) {
  require_first_order(A);
  if (c.c1 == 0.0) throw InvalidArgument("synthesis constant c1 must be nonzero");
  validate(A, K);
  const double a0_at_0 = A.coeff(0).at(0);

  if (A.coeff(0).is_closed_form() && A.coeff(1).is_closed_form()) {
    Expr b1 = Expr::number(c.c1) * A.coeff(1).expr();
    Expr b0 = Expr::number(c.c1) * (A.coeff(0).expr() - Expr::number(a0_at_0)) +
              Expr::number(c.c0);
    return LtvSystem::first_order(CoefficientSequence::closed_form(std::move(b1)),
                                  CoefficientSequence::closed_form(std::move(b0)), y0,
                                  A.label() + "_pair");
  }
  const std::vector<double> a0 = A.coeff(0).tabulate(K);
  const std::vector<double> a1 = A.coeff(1).tabulate(K);
  std::vector<double> b0(a0.size());
  std::vector<double> b1(a1.size());
  for (std::size_t k = 0; k < a0.size(); ++k) {
    b1[k] = c.c1 * a1[k];
    b0[k] = c.c1 * (a0[k] - a0_at_0) + c.c0;
  }
  return LtvSystem::first_order(CoefficientSequence::tabulated(std::move(b1)),
                                CoefficientSequence::tabulated(std::move(b0)), y0,
                                A.label() + "_pair");
}

double required_c0(const LtvSystem& A, double c1) {
  require_first_order(A);
  if (c1 == 0.0) throw InvalidArgument("synthesis constant c1 must be nonzero");
  return 1.0 - c1 + c1 * A.coeff(0).at(0);
}

FeedbackPairResult feedback_pair(const LtvSystem& A, const FeedbackGains& g, long K) {
  require_first_order(A);
  if (g.alpha == 0.0) throw InvalidArgument("feed-forward gain alpha must be nonzero");
  validate(A, K);

  const double y0A = A.initial_state()[0];
  const bool warn = y0A != 0.0 && !approx_equal(g.beta, 1.0 - 1.0 / g.alpha);

  if (A.coeff(0).is_closed_form() && A.coeff(1).is_closed_form()) {
    Expr b1 = A.coeff(1).expr() / Expr::number(g.alpha);
    Expr b0 = A.coeff(0).expr() / Expr::number(g.alpha) + Expr::number(g.beta);
    return FeedbackPairResult{
        LtvSystem::first_order(CoefficientSequence::closed_form(std::move(b1)),
                               CoefficientSequence::closed_form(std::move(b0)), y0A,
                               A.label() + "_fb"),
        warn};
  }
  const std::vector<double> a0 = A.coeff(0).tabulate(K);
  const std::vector<double> a1 = A.coeff(1).tabulate(K);
  std::vector<double> b0(a0.size());
  std::vector<double> b1(a1.size());
  for (std::size_t k = 0; k < a0.size(); ++k) {
    b1[k] = a1[k] / g.alpha;
    b0[k] = a0[k] / g.alpha + g.beta;
  }
  return FeedbackPairResult{
      LtvSystem::first_order(CoefficientSequence::tabulated(std::move(b1)),
                             CoefficientSequence::tabulated(std::move(b0)), y0A,
                             A.label() + "_fb"),
      warn};
}

FeedbackGains gains_from_constants(const LtvSystem& A, const SynthesisConstants& c) {
  require_first_order(A);
  if (c.c1 == 0.0) throw InvalidArgument("synthesis constant c1 must be nonzero");
  return FeedbackGains{1.0 / c.c1, c.c0 - c.c1 * A.coeff(0).at(0)};
}

CommutativityReport zero_order_commutes(const LtvSystem& A, const LtvSystem& Z, long K,
                                        bool with_initial_conditions, const Tolerance& tol) {
  require_first_order(A);
  if (Z.order() != 0) {
    throw InvalidArgument("system '" + Z.label() + "' must be zero-order, got order " +
                          std::to_string(Z.order()));
  }
  if (K < 0) throw InvalidArgument("horizon must be nonnegative");
  validate(Z, K + 1);

  const std::vector<double> b0 = Z.coeff(0).tabulate(K + 1);

  CommutativityReport report;
  report.with_initial_conditions = with_initial_conditions;
  report.zero_state_ok = true;
  for (long k = 0; k <= K; ++k) {
    const std::size_t j = static_cast<std::size_t>(k);
    // the two orders differ only in the y(k+1) coefficient: b0(k+1) vs b0(k)
    if (!coeff_equal(b0[j], b0[j + 1], tol)) {
      report.zero_state_ok = false;
      note_violation(report, "c1", k, b0[j + 1], b0[j]);
      break;
    }
  }
  report.general_ok = report.zero_state_ok;
  report.zero_input_sufficient_ok = report.zero_state_ok;

  const double y0A = A.initial_state()[0];
  if (with_initial_conditions && y0A != 0.0) {
    // derived initial values: y0A / b0(0) for one order, y0A for the other
    report.ic_constraint_ok = coeff_equal(1.0, b0[0], tol);
    if (!report.ic_constraint_ok) note_violation(report, "ic0", 0, b0[0], 1.0);
  } else {
    report.ic_constraint_ok = true;
  }
  return report;
}

}  // namespace ltv
