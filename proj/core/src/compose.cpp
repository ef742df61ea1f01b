#include "ltv/compose.hpp"

namespace ltv {

namespace {

void require_order(const LtvSystem& sys, int order, const char* role) {
  if (sys.order() != order) {
    throw InvalidArgument(std::string("cascade ") + role + " system '" + sys.label() +
                          "' must have order " + std::to_string(order) + ", got " +
                          std::to_string(sys.order()));
  }
}

}  // namespace

CascadeSystem cascade_first_order(const LtvSystem& first, const LtvSystem& second, long K) {
  require_order(first, 1, "first");
  require_order(second, 1, "second");
  if (K < 2) throw InvalidArgument("a second-order cascade needs a horizon of at least 2");
  validate(first, K + 1);
  validate(second, K + 1);

  const std::vector<double> f0 = first.coeff(0).tabulate(K);
  const std::vector<double> f1 = first.coeff(1).tabulate(K);
  const std::vector<double> s0 = second.coeff(0).tabulate(K + 1);
  const std::vector<double> s1 = second.coeff(1).tabulate(K + 1);

  std::vector<double> c0(static_cast<std::size_t>(K) + 1);
  std::vector<double> c1(static_cast<std::size_t>(K) + 1);
  std::vector<double> c2(static_cast<std::size_t>(K) + 1);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(K); ++k) {
    c2[k] = f1[k] * s1[k + 1];
    c1[k] = f1[k] * s0[k + 1] + f0[k] * s1[k];
    c0[k] = f0[k] * s0[k];
  }

  const double y0_first = first.initial_state()[0];
  const double y0_second = second.initial_state()[0];
  const double y0 = y0_second;
  const double y1 = (y0_first - s0[0] * y0_second) / s1[0];

  LtvSystem inner({CoefficientSequence::tabulated(std::move(c0)),
                   CoefficientSequence::tabulated(std::move(c1)),
                   CoefficientSequence::tabulated(std::move(c2))},
                  {y0, y1}, first.label() + second.label());
  return CascadeSystem{std::move(inner), first.label(), second.label()};
}

Signal cascade_chain(const LtvSystem& first, const LtvSystem& second, const Signal& x, long K) {
  return simulate(second, simulate(first, x, K), K);
}

LtvSystem cascade_with_zero_order(const LtvSystem& A, const LtvSystem& Z, CascadeOrder order,
                                  long K) {
  require_order(A, 1, "first-order");
  require_order(Z, 0, "zero-order");
  if (K < 1) throw InvalidArgument("a first-order cascade needs a horizon of at least 1");
  validate(A, K);
  validate(Z, K + 1);  // leading coefficient of Z is its gain b0: nonzero on [0, K+1]

  const std::vector<double> a0 = A.coeff(0).tabulate(K);
  const std::vector<double> a1 = A.coeff(1).tabulate(K);
  const std::vector<double> b0 = Z.coeff(0).tabulate(K + 1);

  std::vector<double> c0(static_cast<std::size_t>(K) + 1);
  std::vector<double> c1(static_cast<std::size_t>(K) + 1);
  const bool a_first = order == CascadeOrder::AB;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(K); ++k) {
    c1[k] = a_first ? a1[k] * b0[k + 1] : a1[k] * b0[k];
    c0[k] = a0[k] * b0[k];
  }
  const double y0A = A.initial_state()[0];
  const double y0 = a_first ? y0A / b0[0] : y0A;
  const std::string label =
      a_first ? A.label() + Z.label() : Z.label() + A.label();
  return LtvSystem({CoefficientSequence::tabulated(std::move(c0)),
                    CoefficientSequence::tabulated(std::move(c1))},
                   {y0}, label);
}

}  // namespace ltv
