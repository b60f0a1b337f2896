// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "kloos/errors.hpp"
#include "kloos/kloosterman.hpp"
#include "kloos/matrices.hpp"
#include "support.hpp"

using namespace kloos;
using kloos::testing::Gen;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

// The magic matrix B'_1 for p = 7 as printed.
const IntMatrix kBPrime7 = from_rows({{1, 0, 2, 1, 0, 0},
                                      {0, 1, 0, 1, 0, 2},
                                      {2, 0, 0, 2, 0, 0},
                                      {1, 1, 2, 0, 0, 0},
                                      {0, 0, 0, 0, 2, 2},
                                      {0, 2, 0, 0, 2, 0}});

// A_1 for p = 11 as printed.
const IntMatrix kA11 = from_rows({{0, 0, 0, 1, 2, 2, 0, 0, 2, 2, 0},
                                  {0, 2, 2, 2, 0, 2, 0, 0, 0, 0, 1},
                                  {0, 2, 1, 0, 1, 2, 0, 2, 0, 0, 1},
                                  {1, 2, 0, 0, 0, 0, 0, 2, 1, 2, 1},
                                  {2, 0, 1, 0, 2, 0, 2, 0, 1, 0, 1},
                                  {2, 2, 2, 0, 0, 0, 2, 0, 0, 0, 1},
                                  {0, 0, 0, 0, 2, 2, 0, 2, 0, 2, 1},
                                  {0, 0, 2, 2, 0, 0, 2, 0, 2, 0, 1},
                                  {2, 0, 0, 1, 1, 0, 0, 2, 2, 0, 1},
                                  {2, 0, 0, 2, 0, 0, 2, 0, 0, 2, 1},
                                  {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0}});

// 1 + (beta / p) with the symbol found by enumerating squares.
int coefficient_oracle(std::int64_t p, std::int64_t i, std::int64_t j, std::int64_t k) {
  const std::int64_t b = i * i + j * j + k * k - 2 * i * j - 2 * j * k - 2 * i * k;
  return 1 + kloos::testing::legendre_by_enumeration(b, p);
}

}  // namespace

TEST_SUITE("matrices") {
  TEST_CASE("beta") {
    CHECK(beta(1, 1, 1) == -3);
    CHECK(beta(1, 1, 4) == 0);
    const std::int64_t b = beta(2, 3, 5);
    CHECK(beta(2, 5, 3) == b);
    CHECK(beta(3, 2, 5) == b);
    CHECK(beta(3, 5, 2) == b);
    CHECK(beta(5, 2, 3) == b);
    CHECK(beta(5, 3, 2) == b);
  }

  TEST_CASE("class coefficient examples") {
    const Prime p(7);
    CHECK(class_coefficient(p, 1, 1, 1) == 2);
    CHECK(class_coefficient(p, 1, 2, 2) == 1);
    CHECK(class_coefficient(p, 1, 1, 2) == 0);
    CHECK_THROWS_AS(class_coefficient(p, 0, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(class_coefficient(p, 1, 7, 1), InvalidArgument);
  }

  TEST_CASE("property: permutation and scaling symmetry") {
    for (const Prime& p : primes_in_range(5, 13)) {
      const std::int64_t q = p.value();
      for (std::int64_t i = 1; i < q; ++i) {
        for (std::int64_t j = 1; j < q; ++j) {
          for (std::int64_t k = 1; k < q; ++k) {
            const int c = class_coefficient(p, i, j, k);
            REQUIRE(c == coefficient_oracle(q, i, j, k));
            REQUIRE(c == class_coefficient(p, j, i, k));
            REQUIRE(c == class_coefficient(p, k, j, i));
            REQUIRE(c == class_coefficient(p, i, k, j));
          }
        }
      }
    }
    Gen gen(0x3a7);
    for (int trial = 0; trial < 10000; ++trial) {
      const Prime p = gen.prime(101);
      const std::int64_t i = gen.unit(p), j = gen.unit(p), k = gen.unit(p), l = gen.unit(p);
      const int c = class_coefficient(p, i, j, k);
      REQUIRE(c == coefficient_oracle(p.value(), i, j, k));
      REQUIRE(c == class_coefficient(p, k, i, j));
      REQUIRE(c == class_coefficient(p, j, k, i));
      REQUIRE(c == class_coefficient(p, p.reduce(l * i), p.reduce(l * j), p.reduce(l * k)));
    }
  }

  TEST_CASE("property: build_b agrees with the enumeration oracle, p <= 31") {
    for (const Prime& p : primes_in_range(5, 31)) {
      for (std::int64_t i = 1; i < p.value(); ++i) {
        const IntMatrix b = build_b(p, i);
        for (std::int64_t j = 1; j < p.value(); ++j) {
          for (std::int64_t k = 1; k < p.value(); ++k) {
            REQUIRE(b(j - 1, k - 1) == coefficient_oracle(p.value(), i, j, k));
          }
        }
      }
    }
  }

  TEST_CASE("printed matrices") {
    const KloostermanTable kt7 = build_table(Prime(7));
    const ClassMatrices m7 = build_class_matrices(kt7, 1);
    CHECK(magic_variants(m7).b_prime == kBPrime7);
    std::vector<long long> row1(m7.B.row(0).begin(), m7.B.row(0).end());
    CHECK(row1 == std::vector<long long>{2, 0, 2, 1, 0, 0});

    const ClassMatrices m11 = build_class_matrices(build_table(Prime(11)), 1);
    CHECK(m11.A == kA11);
    CHECK(magic_variants(m11).a == kA11);
  }

  TEST_CASE("T, D and U structure") {
    for (const std::int64_t q : {5, 7, 11, 13}) {
      const Prime p(q);
      const KloostermanTable kt = build_table(p);
      const double sf = std::sqrt(static_cast<double>(q - 1));
      for (std::int64_t i = 1; i < q; ++i) {
        const ClassMatrices m = build_class_matrices(kt, i);
        const auto n = static_cast<std::size_t>(q + 2);
        REQUIRE(m.T.rows() == n);
        REQUIRE(is_symmetric(m.T));
        REQUIRE(m.B == build_b(p, i));
        REQUIRE(m.A == build_a(p, i));
        const auto ii = static_cast<std::size_t>(i - 1);
        for (std::size_t j = 0; j + 3 < n; ++j) {
          const double border = j == ii ? 0.0 : 1.0;
          REQUIRE(m.T(j, n - 3) == border);
          REQUIRE(m.T(j, n - 2) == border);
          REQUIRE(m.T(j, n - 1) == doctest::Approx(j == ii ? sf : 0.0));
          REQUIRE(m.A(j, n - 3) == static_cast<long long>(border));
        }
        REQUIRE(m.T(n - 3, n - 2) == 1.0);
        REQUIRE(m.T(n - 1, n - 1) == 0.0);
        for (std::size_t j = 0; j + 3 < n; ++j) {
          REQUIRE(m.D[j] == doctest::Approx(kt[static_cast<std::int64_t>(j + 1) * i]));
        }
        REQUIRE(m.D[n - 3] == -1.0);
        REQUIRE(m.D[n - 2] == -1.0);
        REQUIRE(m.D[n - 1] == static_cast<double>(q - 1));
      }
      const RealMatrix u = build_truncated_u(kt);
      const auto n = static_cast<std::size_t>(q + 2);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        REQUIRE(u(j, n - 1) == doctest::Approx(sf / q));
      }
      REQUIRE(u(n - 1, n - 1) == doctest::Approx(1.0 / q));
      REQUIRE(is_symmetric(u));
    }
  }

  TEST_CASE("diagonalization examples") {
    const ClassMatrices m7 = build_class_matrices(build_table(Prime(7)), 1);
    CHECK(verify_truncated_diagonalization(m7, 1e-8).pass);
    const ClassMatrices m101 = build_class_matrices(build_table(Prime(101)), 50);
    const DiagonalizationResidual r = verify_truncated_diagonalization(m101, 1e-7);
    CHECK(r.pass);
    CHECK(r.eigen_residual < 1e-9);
    const ClassMatrices m11 = build_class_matrices(build_table(Prime(11)), 2);
    CHECK(verify_truncated_diagonalization(m11, 1e-9).involution_residual < 1e-12);
  }

  TEST_CASE("extended precision K values tighten the residual") {
    const KloostermanTable kt = build_table(Prime(199));
    const auto plain = verify_truncated_diagonalization(build_class_matrices(kt, 7, KPrecision::kFloat), 1e-7);
    const auto wide = verify_truncated_diagonalization(build_class_matrices(kt, 7, KPrecision::kExtended), 1e-7);
    CHECK(plain.pass);
    CHECK(wide.pass);
  }

  TEST_CASE("magic report examples") {
    const ClassMatrices m7 = build_class_matrices(build_table(Prime(7)), 1);
    const MagicReport r7 = magic_report(m7);
    CHECK(r7.total == EntryCensus{21, 5, 10});
    CHECK(r7.trace == 5);
    CHECK(r7.trace_of_square == 2 * 49 - 63 + 10);
    CHECK(r7.diagonal_one_position == 2);  // i * 4^-1 = 2 mod 7
    const IntMatrix bp = magic_variants(m7).b_prime;
    for (std::size_t j = 0; j < 6; ++j) {
      long long row = 0;
      for (std::size_t k = 0; k < 6; ++k) row += bp(j, k);
      CHECK(row == 4);
    }

    const ClassMatrices m11 = build_class_matrices(build_table(Prime(11)), 1);
    const MagicReport r11 = magic_report(m11);
    for (const auto s : r11.a_row_sums) CHECK(s == 9);
    for (const auto& [ratio, sum] : r11.broken_diagonal_sums) CHECK(sum == (ratio == 1 ? 9 : 8));
    const auto json = magic_report_to_json(r11);
    CHECK(json["p"] == 11);
  }

  TEST_CASE("property: magic report holds for every i, p <= 61") {
    for (const Prime& p : primes_in_range(5, 61)) {
      const KloostermanTable kt = build_table(p);
      for (std::int64_t i = 1; i < p.value(); ++i) REQUIRE_NOTHROW(magic_report(build_class_matrices(kt, i)));
    }
  }

  TEST_CASE("property: census rows from the oracle") {
    Gen gen(0x3a8);
    for (int trial = 0; trial < 200; ++trial) {
      const Prime p = gen.prime(199);
      const std::int64_t i = gen.unit(p), j = gen.unit(p);
      EntryCensus c;
      for (std::int64_t k = 1; k < p.value(); ++k) {
        const int v = coefficient_oracle(p.value(), i, j, k);
        (v == 0 ? c.zeros : v == 1 ? c.ones : c.twos) += 1;
      }
      REQUIRE(c == expected_row_census(p, i, j));
    }
  }

  TEST_CASE("magic report rejects a corrupted matrix") {
    ClassMatrices m = build_class_matrices(build_table(Prime(13)), 3);
    m.B(0, 1) += 1;
    m.B(1, 0) += 1;
    CHECK_THROWS_AS(magic_report(m), MagicViolation);
  }

  TEST_CASE("exports") {
    const ClassMatrices m = build_class_matrices(build_table(Prime(5)), 2);
    const std::string csv = matrix_to_csv(m.T);
    CHECK(csv.find("2,") != std::string::npos);
    CHECK(csv.find("1.9999999999999") == std::string::npos);
    CHECK(matrix_to_csv(m.B).rfind(std::to_string(class_coefficient(Prime(5), 2, 1, 1)) + ",", 0) == 0);
    const auto j = class_matrices_to_json(m);
    CHECK(j["T"].size() == 7);
    CHECK(j["A"].size() == 5);
    CHECK(j["D"].size() == 7);
  }
}
