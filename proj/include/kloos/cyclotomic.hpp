// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KLOOS_CYCLOTOMIC_HPP
#define KLOOS_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kloos/modular.hpp"

namespace kloos {

/// An exact element of Z[zeta_p], zeta_p = exp(2 pi i / p).
///
/// Stored on the power basis zeta^0 .. zeta^{p-2}. The coordinate of
/// zeta^{p-1} is eliminated with 1 + zeta + ... + zeta^{p-1} = 0, so two
/// elements are equal exactly when their coefficient vectors are equal.
///
/// Internally most arithmetic goes through the cyclic representation, a
/// length-p vector in Z[x]/(x^p - 1); any such vector maps onto Z[zeta]
/// and two cyclic vectors agree in Z[zeta] iff their difference is constant.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(Prime p) : p_(p), coeffs_(static_cast<std::size_t>(p.f()), 0) {}

  static CyclotomicInt constant(Prime p, std::int64_t c);
  /// zeta^k for any integer k.
  static CyclotomicInt zeta_power(Prime p, std::int64_t k);
  /// Reduces a length-p cyclic vector to canonical form.
  static CyclotomicInt from_cyclic(Prime p, std::span<const std::int64_t> cyclic);

  const Prime& modulus() const noexcept { return p_; }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

  /// Length-p cyclic representative with a zero zeta^{p-1} slot.
  std::vector<std::int64_t> to_cyclic() const;

  /// Image under the automorphism zeta -> zeta^a, gcd(a, p) = 1.
  CyclotomicInt galois(std::int64_t a) const;
  /// Complex conjugation, zeta -> zeta^{-1}.
  CyclotomicInt conjugate() const { return galois(-1); }

  bool is_integer() const noexcept;
  /// The rational integer this element equals, if it is one.
  std::optional<std::int64_t> as_integer() const noexcept;

  double real_embedding() const { return real_embedding_as<double>(); }
  template <class Float>
  Float real_embedding_as() const;
  std::complex<double> embedding() const;

  CyclotomicInt& operator+=(const CyclotomicInt& other);
  CyclotomicInt& operator-=(const CyclotomicInt& other);
  CyclotomicInt& operator*=(std::int64_t scalar);

  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, std::int64_t s) { return a *= s; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  CyclotomicInt operator-() const { return *this * std::int64_t{-1}; }

  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

  /// e.g. "3 - z^2 + 2 z^5"; "0" for zero.
  std::string to_string() const;

 private:
  Prime p_;
  std::vector<std::int64_t> coeffs_;
};

/// acc += a * b in Z[x]/(x^p - 1); all three spans have length p.
void add_cyclic_product(std::span<std::int64_t> acc, std::span<const std::int64_t> a,
                        std::span<const std::int64_t> b);

/// Running sum of exact terms held in cyclic form; reduced once at the end.
class CyclicAccumulator {
 public:
  explicit CyclicAccumulator(Prime p) : p_(p), acc_(static_cast<std::size_t>(p.value()), 0) {}

  void add(std::span<const std::int64_t> cyclic, std::int64_t scale = 1);
  void add_product(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    add_cyclic_product(acc_, a, b);
  }
  void add_constant(std::int64_t c) { acc_[0] += c; }

  CyclotomicInt result() const { return CyclotomicInt::from_cyclic(p_, acc_); }

 private:
  Prime p_;
  std::vector<std::int64_t> acc_;
};

}  // namespace kloos

#endif  // KLOOS_CYCLOTOMIC_HPP
