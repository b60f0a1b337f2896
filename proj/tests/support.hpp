// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

// Independent oracles and random generators shared by the unit tests.
// Nothing here calls the library routine it is used to check.

#ifndef KLOOS_TESTS_SUPPORT_HPP
#define KLOOS_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "kloos/cyclotomic.hpp"
#include "kloos/modular.hpp"

namespace kloos::testing {

/// Seeded generator; each test owns one so failures replay exactly.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Uniform among primes in [5, hi].
  Prime prime(std::int64_t hi) {
    const std::vector<Prime> all = primes_in_range(5, hi);
    return all[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(all.size()) - 1))];
  }
  std::int64_t unit(const Prime& p) { return integer(1, p.f()); }
  std::int64_t residue(const Prime& p) { return integer(0, p.f()); }

  CyclotomicInt cyclotomic(const Prime& p, std::int64_t bound) {
    std::vector<std::int64_t> cyclic(static_cast<std::size_t>(p.value()));
    for (auto& c : cyclic) c = integer(-bound, bound);
    return CyclotomicInt::from_cyclic(p, cyclic);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Squares mod p by enumeration.
inline int legendre_by_enumeration(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == a) return 1;
  }
  return -1;
}

/// Inverse by search.
inline std::int64_t inverse_by_search(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x) {
    if (a % p * x % p == 1) return x;
  }
  return 0;
}

/// K(a, b) summed in long double straight from the definition.
inline long double kloosterman_naive(std::int64_t a, std::int64_t b, std::int64_t p) {
  long double s = 0.0L;
  const long double w = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(p);
  for (std::int64_t n = 1; n < p; ++n) {
    const std::int64_t nbar = inverse_by_search(n, p);
    const std::int64_t e = ((a * n + b * nbar) % p + p) % p;
    s += std::cos(w * static_cast<long double>(e));
  }
  return s;
}

/// Coefficients of a * b in Z[x], reduced modulo 1 + x + ... + x^{p-1}
/// by long division, returned in the basis 1, x, ..., x^{p-2}.
inline std::vector<std::int64_t> multiply_mod_cyclotomic(const std::vector<std::int64_t>& a,
                                                         const std::vector<std::int64_t>& b,
                                                         std::int64_t p) {
  std::vector<std::int64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  const auto deg = static_cast<std::size_t>(p - 1);  // Phi_p is monic of degree p - 1
  for (std::size_t top = prod.size(); top-- > deg;) {
    const std::int64_t lead = prod[top];
    if (lead == 0) continue;
    for (std::size_t k = 0; k <= deg; ++k) prod[top - deg + k] -= lead;
  }
  prod.resize(deg);
  return prod;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace kloos::testing

#endif  // KLOOS_TESTS_SUPPORT_HPP
