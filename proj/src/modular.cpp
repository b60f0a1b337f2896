// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#include "kloos/modular.hpp"

#include <string>

#include "kloos/errors.hpp"

namespace kloos {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::int64_t value) : value_(value) {
  if (value <= 3 || !is_prime(value)) {
    throw InvalidPrime(std::to_string(value) + " is not an odd prime > 3");
  }
}

std::vector<Prime> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<Prime> out;
  for (std::int64_t q = lo < 5 ? 5 : lo; q <= hi; ++q) {
    if (is_prime(q)) out.emplace_back(q);
  }
  return out;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) noexcept {
  __extension__ using u128 = unsigned __int128;
  std::int64_t b = base % m;
  if (b < 0) b += m;
  std::uint64_t result = 1 % static_cast<std::uint64_t>(m);
  std::uint64_t acc = static_cast<std::uint64_t>(b);
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::uint64_t>(u128(result) * acc % m);
    acc = static_cast<std::uint64_t>(u128(acc) * acc % m);
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t inverse_mod(std::int64_t n, const Prime& p) {
  std::int64_t a = p.reduce(n);
  if (a == 0) throw ZeroInverse("0 has no inverse modulo " + std::to_string(p.value()));
  // Extended Euclid on (a, p).
  std::int64_t r0 = p.value(), r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return p.reduce(t0);
}

Residue mod_inverse(Residue n) {
  return {n.modulus(), inverse_mod(n.value(), n.modulus())};
}

int legendre(std::int64_t a, const Prime& p) noexcept {
  const std::int64_t r = p.reduce(a);
  if (r == 0) return 0;
  return pow_mod(r, (p.value() - 1) / 2, p.value()) == 1 ? 1 : -1;
}

std::int64_t multiplicative_order(std::int64_t a, const Prime& p) {
  const std::int64_t r = p.reduce(a);
  if (r == 0) throw ZeroInverse("0 is not a unit");
  // The order divides p - 1; strip each prime factor q while a^(n/q) == 1.
  std::int64_t order = p.f();
  std::int64_t rest = p.f();
  std::vector<std::int64_t> factors;
  for (std::int64_t q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    factors.push_back(q);
    while (rest % q == 0) rest /= q;
  }
  if (rest > 1) factors.push_back(rest);
  for (const std::int64_t q : factors) {
    while (order % q == 0 && pow_mod(r, order / q, p.value()) == 1) order /= q;
  }
  return order;
}

Residue primitive_root(const Prime& p) {
  for (std::int64_t g = 2; g < p.value(); ++g) {
    if (multiplicative_order(g, p) == p.f()) return {p, g};
  }
  // Unreachable: (Z/pZ)^x is cyclic.
  throw Error("no primitive root found");
}

}  // namespace kloos
