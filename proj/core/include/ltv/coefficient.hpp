#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ltv/expr.hpp"

namespace ltv {

/// One time-varying coefficient a_i(k): either a closed-form expression in k
/// or a table of values defined exactly on k in [0, K].
class CoefficientSequence {
 public:
  static CoefficientSequence closed_form(Expr e) { return CoefficientSequence(std::move(e)); }
  static CoefficientSequence closed_form(std::string_view text) {
    return CoefficientSequence(Expr::parse(text));
  }
  static CoefficientSequence constant(double value) {
    return CoefficientSequence(Expr::number(value));
  }
  static CoefficientSequence tabulated(std::vector<double> values);

  /// Value at step k >= 0. Closed forms evaluate the expression; tables are
  /// bounds-checked (outside [0, K] is a DomainError). Evaluation errors
  /// carry the offending k.
  double at(long k) const;

  /// Values at k = 0..K. Tabulating a table returns its prefix.
  std::vector<double> tabulate(long K) const;

  bool is_closed_form() const { return std::holds_alternative<Expr>(form_); }
  const Expr& expr() const { return std::get<Expr>(form_); }
  const std::vector<double>& table() const { return std::get<std::vector<double>>(form_); }

  /// Expression text, or "tabulated[n]" for tables.
  std::string describe() const;

 private:
  explicit CoefficientSequence(Expr e) : form_(std::move(e)) {}
  explicit CoefficientSequence(std::vector<double> values) : form_(std::move(values)) {}
  std::variant<Expr, std::vector<double>> form_;
};

}  // namespace ltv
