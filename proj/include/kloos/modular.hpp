// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KLOOS_MODULAR_HPP
#define KLOOS_MODULAR_HPP

#include <cstdint>
#include <vector>

namespace kloos {

/// An odd prime p > 3, validated by trial division at construction.
///
/// Every other type in the library is parameterised by one of these; the
/// constructor throws InvalidPrime for anything else.
class Prime {
 public:
  explicit Prime(std::int64_t value);

  std::int64_t value() const noexcept { return value_; }
  /// f = p - 1, the order of the unit group.
  std::int64_t f() const noexcept { return value_ - 1; }

  /// Reduces any integer into [0, p).
  std::int64_t reduce(std::int64_t a) const noexcept {
    std::int64_t r = a % value_;
    return r < 0 ? r + value_ : r;
  }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::int64_t value_;
};

/// Trial division up to sqrt(n).
bool is_prime(std::int64_t n) noexcept;

/// All primes q with 5 <= lo <= q <= hi (q > 3 always).
std::vector<Prime> primes_in_range(std::int64_t lo, std::int64_t hi);

/// An element of Z/pZ.
class Residue {
 public:
  Residue(Prime modulus, std::int64_t value)
      : modulus_(modulus), value_(modulus.reduce(value)) {}

  std::int64_t value() const noexcept { return value_; }
  const Prime& modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend Residue operator+(Residue a, Residue b) {
    return {a.modulus_, a.value_ + b.value_};
  }
  friend Residue operator-(Residue a, Residue b) {
    return {a.modulus_, a.value_ - b.value_};
  }
  friend Residue operator*(Residue a, Residue b) {
    return {a.modulus_, a.value_ * b.value_};
  }
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Prime modulus_;
  std::int64_t value_;
};

/// base^exp mod m for exp >= 0, m > 0; uses 128-bit intermediates.
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) noexcept;

/// Inverse of a unit modulo p; throws ZeroInverse when n is 0 mod p.
std::int64_t inverse_mod(std::int64_t n, const Prime& p);

/// The residue m with n * m = 1 (mod p). Throws ZeroInverse for n = 0.
Residue mod_inverse(Residue n);

/// Legendre symbol (a / p) by Euler's criterion; a may be any integer.
int legendre(std::int64_t a, const Prime& p) noexcept;

/// Smallest g >= 2 of multiplicative order p - 1.
Residue primitive_root(const Prime& p);

/// Multiplicative order of a unit a modulo p.
std::int64_t multiplicative_order(std::int64_t a, const Prime& p);

}  // namespace kloos

#endif  // KLOOS_MODULAR_HPP
