// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <map>

#include "kloos/errors.hpp"
#include "kloos/group_oracle.hpp"
#include "kloos/kloosterman.hpp"
#include "kloos/matrices.hpp"
#include "support.hpp"

using namespace kloos;
using kloos::testing::Gen;

namespace {

GroupElement random_element(Gen& gen, const Prime& p) {
  return {gen.unit(p), gen.residue(p), gen.residue(p)};
}

}  // namespace

TEST_SUITE("group_oracle") {
  TEST_CASE("enumeration") {
    CHECK(enumerate_group(Prime(5)).size() == 100);
    CHECK(enumerate_group(Prime(7)).size() == 294);
    CHECK_THROWS_AS(Group(Prime(37)), PrimeTooLarge);
    for (const Prime& p : primes_in_range(5, 31)) {
      const Group g(p);
      REQUIRE(g.order() == static_cast<std::size_t>(p.f() * p.value() * p.value()));
      for (std::size_t k = 0; k < g.order(); ++k) REQUIRE(g.index_of(g.elements()[k]) == k);
    }
  }

  TEST_CASE("property: group law agrees with 4x4 matrices") {
    Gen gen(0x6700);
    for (int trial = 0; trial < 500; ++trial) {
      const Prime p = gen.prime(31);
      const Group g(p);
      const GroupElement a = random_element(gen, p), b = random_element(gen, p), c = random_element(gen, p);
      REQUIRE(to_matrix4(g.multiply(a, b), p) == multiply_mod(to_matrix4(a, p), to_matrix4(b, p), p));
      REQUIRE(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
      REQUIRE(g.multiply(a, g.inverse(a)) == Group::identity());
      REQUIRE(g.multiply(g.inverse(a), a) == Group::identity());
      REQUIRE(g.multiply(Group::identity(), a) == a);
      REQUIRE(g.multiply(a, Group::identity()) == a);
    }
  }

  TEST_CASE("census") {
    const Group g(Prime(5));
    const ConjugacyPartition c = conjugacy_classes(g);
    REQUIRE(c.count() == 10);
    std::map<std::size_t, int> sizes;
    for (std::size_t k = 1; k <= c.count(); ++k) ++sizes[c.size(k)];
    CHECK(sizes == std::map<std::size_t, int>{{1, 1}, {4, 6}, {25, 3}});
    CHECK(c.classes[6] == std::vector<std::size_t>{g.index_of(Group::identity())});
    CHECK(c.type[6] == ClassType::kType3);

    for (const Prime& p : primes_in_range(5, 31)) {
      const Group group(p);
      const ConjugacyPartition part = conjugacy_classes(group);
      REQUIRE(part.count() == static_cast<std::size_t>(2 * p.value()));
      std::size_t total = 0;
      for (std::size_t k = 1; k <= part.count(); ++k) total += part.size(k);
      REQUIRE(total == group.order());
      // C_i holds (1, i w, w^-1) for every unit w.
      for (std::int64_t i = 1; i < p.value(); ++i) {
        for (std::int64_t w = 1; w < p.value(); ++w) {
          const GroupElement e{1, p.reduce(i * w), inverse_mod(w, p)};
          REQUIRE(part.class_of[group.index_of(e)] == static_cast<std::size_t>(i - 1));
        }
      }
    }
  }

  TEST_CASE("property: classes are closed under conjugation") {
    Gen gen(0x6701);
    for (const Prime& p : primes_in_range(5, 13)) {
      const Group g(p);
      const ConjugacyPartition part = conjugacy_classes(g);
      for (int trial = 0; trial < 300; ++trial) {
        const GroupElement a = random_element(gen, p), h = random_element(gen, p);
        const GroupElement conj = g.multiply(g.multiply(h, a), g.inverse(h));
        REQUIRE(part.class_of[g.index_of(conj)] == part.class_of[g.index_of(a)]);
      }
    }
  }

  TEST_CASE("class coefficient examples") {
    const Group g(Prime(7));
    const ConjugacyPartition part = conjugacy_classes(g);
    CHECK(class_coefficient_bruteforce(g, part, 1, 1, 1) == 2);
    CHECK(class_coefficient_bruteforce(g, part, 1, 1, 2) == class_coefficient(Prime(7), 1, 1, 2));
    // XY = e with Y outside the inverse class of C_i.
    const std::size_t identity_class = 9;  // C_{p+2}
    CHECK(class_coefficient_bruteforce(g, part, 1, 2, identity_class) == 0);
    CHECK(class_coefficient_bruteforce(g, part, 1, 9, identity_class) == 0);
  }

  TEST_CASE("property: brute-force coefficients equal the closed form, p in {5, 7, 11}") {
    for (const std::int64_t q : {5, 7, 11}) {
      const Prime p(q);
      const Group g(p);
      const ConjugacyPartition part = conjugacy_classes(g);
      for (std::int64_t i = 1; i < q; ++i) {
        for (std::int64_t j = 1; j < q; ++j) {
          for (std::int64_t k = 1; k < q; ++k) {
            const auto c = class_coefficient_bruteforce(g, part, i, j, k);
            REQUIRE(c == class_coefficient(p, i, j, k));
            // scaling and permutation symmetry on the oracle side
            const auto l = 1 + (i + j) % (q - 1);
            REQUIRE(c == class_coefficient_bruteforce(g, part, p.reduce(l * i), p.reduce(l * j), p.reduce(l * k)));
            REQUIRE(c == class_coefficient_bruteforce(g, part, k, i, j));
          }
        }
      }
    }
  }

  TEST_CASE("brute-force M_i has the expected block shape") {
    for (const std::int64_t q : {5, 7, 11}) {
      const Prime p(q);
      const Group g(p);
      const ConjugacyPartition part = conjugacy_classes(g);
      const auto n = static_cast<std::size_t>(2 * q);
      for (std::size_t i = 1; i < static_cast<std::size_t>(q); ++i) {
        const IntMatrix m = class_matrix_bruteforce(g, part, i);
        REQUIRE(m.rows() == n);
        for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(q); ++k) {
          long long col = 0;
          for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(q); ++j) col += m(j, k);
          REQUIRE(col == (k + 1 == i ? q - 2 : q - 3));
        }
        // Type-1 times Type-4 lands in Type 4 only, on the diagonal with weight f.
        for (std::size_t j = static_cast<std::size_t>(q) + 2; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) REQUIRE(m(j, k) == (j == k ? q - 1 : 0));
        }
        // C_i C_{i^-1 class} meets the identity f times: (1, y, z)^-1 = (1, -y, -z) stays in C_i.
        REQUIRE(m(i - 1, static_cast<std::size_t>(q) + 1) == q - 1);
      }
    }
  }

  TEST_CASE("character table") {
    const KloostermanTable kt = build_table(Prime(7));
    const CharacterTable ch = build_character_table(kt);
    REQUIRE(ch.count() == 14);
    for (std::size_t k = 1; k <= 14; ++k) CHECK(std::abs(ch.value(9, k) - 1.0) < 1e-12);
    CHECK(std::abs(ch.value(7, 7) - 6.0) < 1e-12);
    CHECK(std::abs(ch.inner_product(1, 1) - 1.0) < 1e-8);
    for (std::size_t j = 1; j <= 6; ++j) {
      for (std::size_t k = 1; k <= 6; ++k) CHECK(std::abs(ch.value(j, k) - kt[static_cast<std::int64_t>(j * k)]) < 1e-12);
      CHECK(std::abs(ch.value(7, j) + 1.0) < 1e-12);
    }
    for (std::size_t a = 1; a <= 14; ++a) {
      for (std::size_t b = 1; b <= 14; ++b) {
        REQUIRE(std::abs(ch.inner_product(a, b) - (a == b ? 1.0 : 0.0)) < 1e-9);
      }
    }
    const std::string csv = character_table_to_csv(ch);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 15);
  }

  TEST_CASE("lemma residuals") {
    for (const auto& [q, i] : std::vector<std::pair<std::int64_t, std::size_t>>{{5, 1}, {7, 3}, {11, 4}, {13, 12}}) {
      const Prime p(q);
      const Group g(p);
      const ConjugacyPartition part = conjugacy_classes(g);
      const CharacterTable ch = build_character_table(build_table(p));
      const LemmaResiduals r = verify_lemma_full(g, part, ch, i);
      CHECK(r.similarity < 1e-8);
      CHECK(r.unitary_similarity < 1e-8);
      CHECK(r.unitarity < 1e-8);
    }
    const Prime p(17);
    const Group g(p);
    const ConjugacyPartition part = conjugacy_classes(g);
    CHECK_THROWS_AS(verify_lemma_full(g, part, build_character_table(build_table(p)), 1), PrimeTooLarge);
  }

  TEST_CASE("census json") {
    const auto j = census_to_json(conjugacy_classes(Group(Prime(5))));
    CHECK(j["group_order"] == 100);
    CHECK(j["class_count"] == 10);
    CHECK(j["classes"][6]["type"] == std::string(to_string(ClassType::kType3)));
  }
}
