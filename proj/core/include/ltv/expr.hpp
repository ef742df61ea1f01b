#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ltv/error.hpp"

namespace ltv {

/// Closed-form expression in the discrete-time variable `k`.
///
/// Grammar (recursive descent, `^` right-associative and binding tighter
/// than the operand of a unary minus):
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' factor)? | '-' factor
///   atom   := NUMBER | 'k' | 'pi' | FUNC '(' expr ')' | '(' expr ')'
///   FUNC   := 'sin' | 'cos' | 'exp'
///
/// Values are immutable and cheap to copy (shared AST). Evaluation is pure
/// double arithmetic: repeated evaluation of the same node at the same k is
/// bit-identical.
class Expr {
 public:
  /// Parse expression text. Throws SyntaxError / UnknownIdentifier.
  static Expr parse(std::string_view text);

  /// Numeric literal. Negative values are normalized to a negated positive
  /// literal so printing always round-trips to the same tree.
  static Expr number(double value);
  /// The time variable `k`.
  static Expr time_variable();
  /// The constant `pi`.
  static Expr pi();

  /// Evaluate at time step k >= 0.
  ///
  /// Power convention: `a ^ b` uses exact integer powering when b is an
  /// exact nonnegative integer (so `(k+1)^2` works for any real base), and
  /// real powering for a > 0 otherwise. Anything else is a DomainError, as
  /// is division by zero. A NaN/inf result raises NonFiniteResult.
  double eval(long k) const;

  /// Canonical text: binary operators surrounded by single spaces, no
  /// parentheses beyond what precedence requires. parse(str()) yields a
  /// structurally identical tree.
  std::string str() const;

  /// Structural tree equality (literals compared exactly).
  bool same_tree(const Expr& other) const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr pow(const Expr& base, const Expr& exponent);
  friend Expr operator-(const Expr& a);  // unary negation

  struct Node;  // AST node; opaque outside the implementation
  using NodePtr = std::shared_ptr<const Node>;

 private:
  explicit Expr(NodePtr node) : node_(std::move(node)) {}
  NodePtr node_;
};

}  // namespace ltv
