#include "qfock/rational.hpp"

#include <charconv>
#include <ostream>
#include <system_error>
#include <utility>

#include "qfock/errors.hpp"

namespace qfock {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw ParseError("not an integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, 1) / mpq_class(den, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpq_class(parse_integer(text)));
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  mpq_class value(num, den);
  value.canonicalize();
  return Rational(std::move(value));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

bool operator==(const Rational& a, const Rational& b) {
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::numerator() const { return value_.get_num().get_str(); }
std::string Rational::denominator() const { return value_.get_den().get_str(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

std::string to_string(const Rational& r) { return r.to_string(); }
std::string to_string(double x) { return format_double(x); }

}  // namespace qfock
