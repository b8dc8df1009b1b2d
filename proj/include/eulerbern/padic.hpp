#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "eulerbern/rational.hpp"

namespace eulerbern {

/// Deterministic trial division; primes used here are small.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Throws std::invalid_argument unless p is an odd prime.
inline void require_odd_prime(std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("p = 2 is not supported; p must be an odd prime");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

/// p-adic valuation: an integer, or +infinity for zero.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(long value) : value_(value) {}
  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Finite value; throws for +infinity.
  long value() const {
    if (infinite_) throw std::logic_error("valuation is +infinity");
    return value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

 private:
  long value_ = 0;
  bool infinite_ = false;
};

namespace detail {
inline long integer_valuation(const Integer& n, std::uint64_t p) {
  Integer rest = n;
  long count = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
    ++count;
  }
  return count;
}
}  // namespace detail

/// nu_p(x) = nu_p(num) - nu_p(den); +infinity for x = 0. |x|_p = p^(-nu_p(x)).
inline Valuation vp(const Rational& x, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (x.is_zero()) return Valuation::infinity();
  return Valuation(detail::integer_valuation(x.num(), p) - detail::integer_valuation(x.den(), p));
}

inline Integer prime_power(std::uint64_t p, unsigned long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), exponent);
  return out;
}

/// Truncation of a p-adic integer: residue r in [0, p^M).
class PadicApprox {
 public:
  PadicApprox(std::uint64_t p, unsigned long precision, const Integer& residue)
      : p_(p), precision_(precision) {
    require_odd_prime(p);
    if (precision == 0) throw std::invalid_argument("p-adic precision must be positive");
    modulus_ = prime_power(p, precision);
    mpz_mod(residue_.get_mpz_t(), residue.get_mpz_t(), modulus_.get_mpz_t());
  }

  std::uint64_t prime() const { return p_; }
  unsigned long precision() const { return precision_; }
  const Integer& residue() const { return residue_; }
  const Integer& modulus() const { return modulus_; }

  /// "r mod p^M"
  std::string to_string() const {
    return residue_.get_str() + " mod " + std::to_string(p_) + "^" + std::to_string(precision_);
  }

  friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
    a.require_same_ring(b);
    return {a.p_, a.precision_, Integer(a.residue_ + b.residue_)};
  }
  friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
    a.require_same_ring(b);
    return {a.p_, a.precision_, Integer(a.residue_ * b.residue_)};
  }
  friend bool operator==(const PadicApprox& a, const PadicApprox& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_ && a.residue_ == b.residue_;
  }
  friend std::ostream& operator<<(std::ostream& os, const PadicApprox& a) { return os << a.to_string(); }

 private:
  void require_same_ring(const PadicApprox& other) const {
    if (p_ != other.p_ || precision_ != other.precision_) {
      throw std::invalid_argument("p-adic operands live in different rings Z/p^M");
    }
  }

  std::uint64_t p_;
  unsigned long precision_;
  Integer modulus_;
  Integer residue_;
};

/// v with u * v = 1 mod p^M.
inline Integer unit_inverse(const Integer& u, std::uint64_t p, unsigned long precision) {
  require_odd_prime(p);
  if (precision == 0) throw std::invalid_argument("p-adic precision must be positive");
  if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(p))) {
    throw std::invalid_argument(u.get_str() + " is not a unit modulo " + std::to_string(p));
  }
  const Integer modulus = prime_power(p, precision);
  Integer inverse;
  mpz_invert(inverse.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
  return inverse;
}

/// Image of a p-integral rational in Z/p^M: num * den^{-1} mod p^M.
inline PadicApprox reduce_mod(const Rational& x, std::uint64_t p, unsigned long precision) {
  require_odd_prime(p);
  if (vp(x, p) < Valuation(0)) {
    throw std::invalid_argument(x.to_string() + " is not a " + std::to_string(p) + "-adic integer");
  }
  const Integer inverse = unit_inverse(x.den(), p, precision);
  return {p, precision, Integer(x.num() * inverse)};
}

}  // namespace eulerbern
