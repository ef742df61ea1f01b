#include "ltv/coefficient.hpp"

#include <cmath>

namespace ltv {

CoefficientSequence CoefficientSequence::tabulated(std::vector<double> values) {
  if (values.empty()) throw InvalidArgument("tabulated coefficient needs at least one value");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      throw NonFiniteResult("tabulated coefficient value is not finite", static_cast<long>(k));
    }
  }
  return CoefficientSequence(std::move(values));
}

double CoefficientSequence::at(long k) const {
  if (k < 0) throw DomainError("coefficient evaluated at negative time", k);
  if (const auto* table = std::get_if<std::vector<double>>(&form_)) {
    if (static_cast<std::size_t>(k) >= table->size()) {
      throw DomainError("tabulated coefficient evaluated outside its horizon", k);
    }
    return (*table)[static_cast<std::size_t>(k)];
  }
  try {
    return std::get<Expr>(form_).eval(k);
  } catch (DomainError& e) {
    if (!e.k) throw DomainError(std::string(e.what()) + " at k=" + std::to_string(k), k);
    throw;
  } catch (NonFiniteResult& e) {
    if (!e.k) throw NonFiniteResult(std::string(e.what()) + " at k=" + std::to_string(k), k);
    throw;
  }
}

std::vector<double> CoefficientSequence::tabulate(long K) const {
  if (K < 0) throw InvalidArgument("tabulation horizon must be nonnegative");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(K) + 1);
  for (long k = 0; k <= K; ++k) out.push_back(at(k));
  return out;
}

std::string CoefficientSequence::describe() const {
  if (is_closed_form()) return expr().str();
  return "tabulated[" + std::to_string(table().size()) + "]";
}

}  // namespace ltv
