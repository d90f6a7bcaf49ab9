#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qfock {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class; division by zero
/// throws DomainError instead of trapping.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses "p/d" or an integer "p". Whitespace is not accepted.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  std::string numerator() const;
  std::string denominator() const;

  double to_double() const { return value_.get_d(); }
  /// "p/d", or "p" when the denominator is 1.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Integer power with non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

inline double to_double(const Rational& r) { return r.to_double(); }
inline double to_double(double x) { return x; }

/// Exact rendering for rationals; shortest round-trip decimal for doubles.
std::string to_string(const Rational& r);
std::string to_string(double x);

/// Shortest round-trip, locale-independent decimal rendering.
std::string format_double(double x);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

}  // namespace qfock
