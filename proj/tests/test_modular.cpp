// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "kloos/errors.hpp"
#include "kloos/modular.hpp"
#include "support.hpp"

using namespace kloos;
using kloos::testing::Gen;

TEST_SUITE("modular") {
  TEST_CASE("prime validation") {
    for (std::int64_t n : {5, 7, 11, 13, 499, 7919}) CHECK_NOTHROW(Prime{n});
    for (std::int64_t n : {-7, 0, 1, 2, 3, 4, 9, 25, 91, 500}) CHECK_THROWS_AS(Prime{n}, InvalidPrime);
    CHECK_THROWS_WITH(Prime{4}, doctest::Contains("not an odd prime > 3"));
  }

  TEST_CASE("primes in range") {
    std::vector<std::int64_t> got;
    for (const Prime& p : primes_in_range(0, 30)) got.push_back(p.value());
    CHECK(got == std::vector<std::int64_t>{5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_in_range(5, 199).size() == 44);
    CHECK(primes_in_range(5, 499).size() == 93);
  }

  TEST_CASE("mod_inverse examples") {
    const Prime p(7);
    CHECK(mod_inverse(Residue(p, 1)).value() == 1);
    CHECK(mod_inverse(Residue(p, 3)).value() == 5);
    CHECK(mod_inverse(Residue(p, 6)).value() == 6);
    CHECK(mod_inverse(Residue(p, -4)).value() == 5);
    CHECK_THROWS_AS(mod_inverse(Residue(p, 0)), ZeroInverse);
    CHECK_THROWS_AS(inverse_mod(14, p), ZeroInverse);
  }

  TEST_CASE("legendre examples") {
    const Prime p(7);
    CHECK(legendre(0, p) == 0);
    CHECK(legendre(4, p) == 1);
    CHECK(legendre(3, p) == -1);
    CHECK(legendre(-3, p) == 1);
    CHECK(legendre(-3, Prime(11)) == -1);
  }

  TEST_CASE("primitive roots") {
    CHECK(primitive_root(Prime(5)).value() == 2);
    CHECK(primitive_root(Prime(7)).value() == 3);
    CHECK(primitive_root(Prime(11)).value() == 2);
    CHECK(primitive_root(Prime(23)).value() == 5);
    CHECK(primitive_root(Prime(41)).value() == 6);
  }

  TEST_CASE("property: inverse and legendre agree with brute force for p <= 199") {
    for (const Prime& p : primes_in_range(5, 199)) {
      for (std::int64_t a = -3; a < p.value() + 3; ++a) {
        REQUIRE(legendre(a, p) == kloos::testing::legendre_by_enumeration(a, p.value()));
        if (p.reduce(a) != 0) {
          REQUIRE(inverse_mod(a, p) == kloos::testing::inverse_by_search(p.reduce(a), p.value()));
        }
      }
    }
  }

  TEST_CASE("property: legendre is multiplicative, half the units are squares") {
    Gen gen(0x5eed01);
    for (int trial = 0; trial < 2000; ++trial) {
      const Prime p = gen.prime(499);
      const std::int64_t a = gen.integer(-1000, 1000), b = gen.integer(-1000, 1000);
      REQUIRE(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
    }
    for (const Prime& p : primes_in_range(5, 101)) {
      int sum = 0;
      for (std::int64_t a = 1; a < p.value(); ++a) sum += legendre(a, p);
      CHECK(sum == 0);
    }
  }

  TEST_CASE("property: primitive root has order p - 1 and is minimal") {
    for (const Prime& p : primes_in_range(5, 499)) {
      const std::int64_t g = primitive_root(p).value();
      REQUIRE(multiplicative_order(g, p) == p.f());
      for (std::int64_t h = 2; h < g; ++h) REQUIRE(multiplicative_order(h, p) < p.f());
    }
  }

  TEST_CASE("property: order divides p - 1 and is the least exponent") {
    Gen gen(0x5eed02);
    for (int trial = 0; trial < 300; ++trial) {
      const Prime p = gen.prime(199);
      const std::int64_t a = gen.unit(p);
      const std::int64_t ord = multiplicative_order(a, p);
      REQUIRE(p.f() % ord == 0);
      std::int64_t x = 1, least = 0;
      for (std::int64_t e = 1; e <= p.f(); ++e) {
        x = x * a % p.value();
        if (x == 1) {
          least = e;
          break;
        }
      }
      REQUIRE(ord == least);
    }
  }

  TEST_CASE("pow_mod uses wide intermediates") {
    CHECK(pow_mod(3, 0, 7) == 1);
    CHECK(pow_mod(10, 18, 1000000007) == 49);  // 10^18 mod (1e9 + 7)
    CHECK(pow_mod(2'000'000'000, 2, 1'000'000'007) == (2'000'000'000LL % 1'000'000'007) * (2'000'000'000LL % 1'000'000'007) % 1'000'000'007);
  }

  TEST_CASE("residue arithmetic") {
    const Prime p(11);
    const Residue a(p, 7), b(p, 9);
    CHECK((a + b).value() == 5);
    CHECK((a - b).value() == 9);
    CHECK((a * b).value() == 8);
    CHECK(Residue(p, -1).value() == 10);
    CHECK(Residue(p, 22).is_zero());
  }
}
