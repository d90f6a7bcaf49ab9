#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "qfock/rational.hpp"

namespace qfock {

/// Field types the engine is instantiated for: exact rationals (default)
/// and doubles for irrational q. The two never mix in one computation.
template <class S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, double>;

enum class Backend { exact, floating };

template <Scalar S>
constexpr Backend backend_of() {
  return std::same_as<S, Rational> ? Backend::exact : Backend::floating;
}

/// The deformation parameter, strictly inside (-1, 1).
template <Scalar S>
class QParam {
 public:
  explicit QParam(S value);

  const S& value() const { return value_; }
  static constexpr Backend backend() { return backend_of<S>(); }

  /// q^k; q^0 = 1 also at q = 0.
  S pow(std::size_t k) const;

  std::string to_string() const { return qfock::to_string(value_); }

 private:
  S value_;
};

using ExactQ = QParam<Rational>;
using FloatQ = QParam<double>;
using AnyQ = std::variant<ExactQ, FloatQ>;

/// "p/d" or an integer literal selects the exact backend; a decimal
/// literal ("0.5", "-3e-1") selects the float backend.
AnyQ parse_q(std::string_view text);

/// [n]_q = 1 + q + ... + q^(n-1), summed explicitly; [0]_q = 0.
template <Scalar S>
S q_int(std::size_t n, const QParam<S>& q);

/// [n]_q! = [1]_q ... [n]_q; [0]_q! = 1.
template <Scalar S>
S q_factorial(std::size_t n, const QParam<S>& q);

/// Gaussian binomial via the multiplicative recurrence
/// [n k] = [n k-1] * [n-k+1]_q / [k]_q. Throws DomainError when k > n.
template <Scalar S>
S q_binomial(std::size_t n, std::size_t k, const QParam<S>& q);

}  // namespace qfock
