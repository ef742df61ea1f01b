#pragma once

#include <filesystem>
#include <vector>

#include "ltv/error.hpp"
#include "ltv/expr.hpp"
#include "ltv/numeric.hpp"

namespace ltv {

/// Finite real sequence on k = 0..K, dense, immutable, all samples finite.
class Signal {
 public:
  explicit Signal(std::vector<double> samples);

  static Signal zeros(long K);
  /// Discrete impulse: 1 at k = l, 0 elsewhere. Requires 0 <= l <= K.
  static Signal unit_sample(long l, long K);
  /// Materialize an expression in k over [0, K].
  static Signal from_expression(const Expr& e, long K);

  std::size_t size() const { return samples_.size(); }
  long horizon() const { return static_cast<long>(samples_.size()) - 1; }
  double operator[](long k) const { return samples_[static_cast<std::size_t>(k)]; }
  const std::vector<double>& samples() const { return samples_; }

  double max_abs() const;
  double min_value() const;
  double max_value() const;

  friend Signal operator+(const Signal& a, const Signal& b);
  friend Signal operator-(const Signal& a, const Signal& b);
  friend Signal operator*(double scale, const Signal& s);

 private:
  std::vector<double> samples_;
};

/// Elementwise agreement under the given tolerance (sizes must match).
bool approx_equal(const Signal& a, const Signal& b, const Tolerance& tol = {});

/// max_k |a(k) - b(k)|; sizes must match.
double max_abs_difference(const Signal& a, const Signal& b);

/// CSV serialization: header "k,value", one row per sample, values with
/// round-trip (17 significant digit) precision. Output is byte-stable.
void write_csv(const std::filesystem::path& path, const Signal& s);
Signal read_csv(const std::filesystem::path& path);

}  // namespace ltv
