#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerbern {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Normalized fraction num/den with den > 0 and gcd(|num|, den) = 1.
///
/// Every constructor canonicalizes, so two equal values always have the same
/// representation and can be compared structurally.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  /// Parses "a" or "a/b" with an optional leading '-' or '+'.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_part = text.substr(0, slash);
    if (slash == std::string_view::npos) return Rational(parse_integer(num_part));
    const auto den_part = text.substr(slash + 1);
    if (!den_part.empty() && (den_part.front() == '-' || den_part.front() == '+')) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    return Rational(parse_integer(num_part), parse_integer(den_part));
  }

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  static Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
      digits.remove_prefix(1);
    }
    if (digits.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    for (char c : digits) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
      }
    }
    Integer out(std::string(digits), 10);
    return text.front() == '-' ? Integer(-out) : out;
  }

  mpq_class value_;
};

/// r^e for a natural exponent.
inline Rational pow(const Rational& base, unsigned long exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rational(num, den);
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// (-1)^e as a small integer.
constexpr int alternating_sign(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace eulerbern

template <>
struct std::hash<eulerbern::Rational> {
  std::size_t operator()(const eulerbern::Rational& r) const {
    return std::hash<std::string>{}(r.to_string());
  }
};
