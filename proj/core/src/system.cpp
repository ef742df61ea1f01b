#include "ltv/system.hpp"

#include <cmath>

namespace ltv {

LtvSystem::LtvSystem(std::vector<CoefficientSequence> coeffs, std::vector<double> initial_state,
                     std::string label)
    : coeffs_(std::move(coeffs)), initial_state_(std::move(initial_state)),
      label_(std::move(label)) {
  if (coeffs_.empty()) throw InvalidArgument("a system needs at least the order-0 coefficient");
  if (initial_state_.size() + 1 != coeffs_.size()) {
    throw InvalidArgument("system '" + label_ + "': order " + std::to_string(order()) +
                          " requires exactly " + std::to_string(coeffs_.size() - 1) +
                          " initial values, got " + std::to_string(initial_state_.size()));
  }
  for (double v : initial_state_) {
    if (!std::isfinite(v)) throw NonFiniteResult("initial state value is not finite");
  }
}

LtvSystem LtvSystem::with_zero_state() const {
  return LtvSystem(coeffs_, std::vector<double>(initial_state_.size(), 0.0), label_);
}

LtvSystem LtvSystem::with_initial_state(std::vector<double> state) const {
  return LtvSystem(coeffs_, std::move(state), label_);
}

LtvSystem LtvSystem::relabeled(std::string label) const {
  return LtvSystem(coeffs_, initial_state_, std::move(label));
}

void validate(const LtvSystem& sys, long K) {
  if (K < 0) throw InvalidArgument("validation horizon must be nonnegative");
  const int n = sys.order();
  for (long k = 0; k <= K; ++k) {
    for (int i = 0; i <= n; ++i) {
      const double v = sys.coeff(i).at(k);
      if (!std::isfinite(v)) {
        throw NonFiniteCoefficient("system '" + sys.label() + "': coefficient " +
                                       std::to_string(i) + " is not finite at k=" +
                                       std::to_string(k),
                                   static_cast<std::size_t>(i), k);
      }
      if (i == n && v == 0.0) {
        throw LeadingCoefficientZero("system '" + sys.label() +
                                         "': leading coefficient vanishes at k=" +
                                         std::to_string(k),
                                     k);
      }
    }
  }
}

Signal simulate(const LtvSystem& sys, const Signal& x, long K) {
  const int n = sys.order();
  if (K < n) {
    throw InvalidArgument("horizon " + std::to_string(K) + " is shorter than system order " +
                          std::to_string(n));
  }
  if (x.horizon() < K) {
    throw InvalidArgument("input signal (length " + std::to_string(x.size()) +
                          ") does not cover horizon " + std::to_string(K));
  }
  validate(sys, K);

  std::vector<double> y(static_cast<std::size_t>(K) + 1);
  if (n == 0) {
    for (long k = 0; k <= K; ++k) y[static_cast<std::size_t>(k)] = x[k] / sys.coeff(0).at(k);
    return Signal(std::move(y));
  }
  for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = sys.initial_state()[static_cast<std::size_t>(i)];
  for (long k = 0; k + n <= K; ++k) {
    double acc = x[k];
    for (int i = 0; i < n; ++i) acc -= sys.coeff(i).at(k) * y[static_cast<std::size_t>(k + i)];
    y[static_cast<std::size_t>(k + n)] = acc / sys.coeff(n).at(k);
  }
  return Signal(std::move(y));
}

Signal impulse_response(const LtvSystem& sys, long l, long K) {
  return simulate(sys.with_zero_state(), Signal::unit_sample(l, K), K);
}

Signal convolve(const std::function<double(long, long)>& h, const Signal& x, long K) {
  if (x.horizon() < K) {
    throw InvalidArgument("input signal does not cover the convolution horizon");
  }
  std::vector<double> y(static_cast<std::size_t>(K) + 1, 0.0);
  for (long k = 0; k <= K; ++k) {
    double acc = 0.0;
    for (long l = 0; l <= k; ++l) acc += x[l] * h(k, l);
    y[static_cast<std::size_t>(k)] = acc;
  }
  return Signal(std::move(y));
}

}  // namespace ltv
