#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerbern/binomial.hpp"
#include "eulerbern/rational.hpp"

namespace eulerbern {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of x^i; the highest stored coefficient is never zero, so the
/// zero polynomial is the empty sequence.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly x() { return Poly({0, 1}); }
  static Poly monomial(std::size_t degree, const Rational& c = 1) {
    if (c.is_zero()) return {};
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Poly(std::move(coeffs));
  }

  /// Parses a comma-separated coefficient list, lowest degree first.
  static Poly parse(std::string_view text) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      coeffs.push_back(Rational::parse(item));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return Poly(std::move(coeffs));
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

  /// Horner evaluation.
  Rational eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  /// this(inner(x)), by Horner over polynomials.
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * inner + Poly::constant(*it);
    }
    return acc;
  }

  /// f(x + shift).
  Poly shifted(const Rational& shift) const { return compose(Poly({shift, 1})); }
  /// f(1 - x).
  Poly reflected() const { return compose(Poly({1, -1})); }

  Poly& operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& rhs) { return *this += -rhs; }
  Poly& operator*=(const Rational& c) {
    if (c.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Coefficient list lowest degree first, "0" for the zero polynomial.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ", ";
      out += coeffs_[i].to_string();
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Poly pow(const Poly& base, unsigned long exponent) {
  Poly result = Poly::constant(1);
  Poly square = base;
  while (exponent) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent) square *= square;
  }
  return result;
}

/// x^k (1 - x)^m expanded in the monomial basis:
/// sum_{j=0}^{m} C(m, j) (-1)^j x^{k+j}.
inline Poly expand_pow_product(std::size_t k, std::size_t m) {
  std::vector<Rational> coeffs(k + m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    Integer c = binom(m, j);
    if (j % 2 == 1) c = -c;
    coeffs[k + j] = Rational(c);
  }
  return Poly(std::move(coeffs));
}

}  // namespace eulerbern
