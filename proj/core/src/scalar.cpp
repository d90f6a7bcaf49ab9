#include "qfock/scalar.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "qfock/errors.hpp"

namespace qfock {

template <Scalar S>
QParam<S>::QParam(S value) : value_(std::move(value)) {
  if constexpr (std::same_as<S, double>) {
    if (!std::isfinite(value_)) throw DomainError("q must be finite");
  }
  if (!(S(-1) < value_ && value_ < S(1))) {
    throw DomainError("q must lie strictly inside (-1, 1), got " + qfock::to_string(value_));
  }
}

template <Scalar S>
S QParam<S>::pow(std::size_t k) const {
  if constexpr (std::same_as<S, Rational>) {
    return qfock::pow(value_, static_cast<unsigned>(k));
  } else {
    S out = 1.0;
    for (std::size_t i = 0; i < k; ++i) out *= value_;
    return out;
  }
}

AnyQ parse_q(std::string_view text) {
  if (text.empty()) throw ParseError("empty q literal");
  bool decimal = text.find_first_of(".eE") != std::string_view::npos;
  if (!decimal) {
    return ExactQ(Rational::parse(text));
  }
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("not a q literal: '" + std::string(text) + "'");
  }
  return FloatQ(value);
}

template <Scalar S>
S q_int(std::size_t n, const QParam<S>& q) {
  S sum = 0;
  S power = 1;
  for (std::size_t k = 0; k < n; ++k) {
    sum += power;
    power *= q.value();
  }
  return sum;
}

template <Scalar S>
S q_factorial(std::size_t n, const QParam<S>& q) {
  S product = 1;
  for (std::size_t k = 2; k <= n; ++k) product *= q_int(k, q);
  return product;
}

template <Scalar S>
S q_binomial(std::size_t n, std::size_t k, const QParam<S>& q) {
  if (k > n) {
    throw DomainError("q_binomial requires k <= n (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  if (2 * k > n) k = n - k;
  S value = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    value *= q_int(n - k + j, q);
    value /= q_int(j, q);
  }
  return value;
}

template class QParam<Rational>;
template class QParam<double>;

template Rational q_int(std::size_t, const ExactQ&);
template double q_int(std::size_t, const FloatQ&);
template Rational q_factorial(std::size_t, const ExactQ&);
template double q_factorial(std::size_t, const FloatQ&);
template Rational q_binomial(std::size_t, std::size_t, const ExactQ&);
template double q_binomial(std::size_t, std::size_t, const FloatQ&);

}  // namespace qfock
