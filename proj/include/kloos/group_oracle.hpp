// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KLOOS_GROUP_ORACLE_HPP
#define KLOOS_GROUP_ORACLE_HPP

// Brute-force model of the group
//   G = { [[x, y], [0, 1]] (+) [[x^-1, z], [0, 1]] : x unit, y, z in Z/pZ }
// for small p. Everything here is an independent oracle for the closed forms
// in matrices.hpp; nothing in this file reads a Legendre symbol.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "kloos/dense.hpp"
#include "kloos/kloosterman.hpp"
#include "kloos/modular.hpp"

#include <json.hpp>

namespace kloos {

inline constexpr std::int64_t kMaxOraclePrime = 31;
inline constexpr std::int64_t kMaxLemmaPrime = 13;

/// (x, y, z) stands for [[x, y], [0, 1]] (+) [[x^-1, z], [0, 1]].
struct GroupElement {
  std::int64_t x = 1;
  std::int64_t y = 0;
  std::int64_t z = 0;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

using Matrix4 = std::array<std::array<std::int64_t, 4>, 4>;

/// Literal 4x4 block-diagonal matrix of an element, entries in [0, p).
Matrix4 to_matrix4(const GroupElement& e, const Prime& p);
/// 4x4 product mod p.
Matrix4 multiply_mod(const Matrix4& a, const Matrix4& b, const Prime& p);

/// The full group, enumerated once, with an O(1) element index.
class Group {
 public:
  /// Throws PrimeTooLarge when p > kMaxOraclePrime.
  explicit Group(Prime p);

  const Prime& prime() const noexcept { return p_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const GroupElement> elements() const noexcept { return elements_; }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  static GroupElement identity() noexcept { return {}; }

  std::size_t index_of(const GroupElement& e) const noexcept;

 private:
  Prime p_;
  std::vector<GroupElement> elements_;
  std::vector<std::int64_t> inverse_;  // inverse_[x] = x^-1 mod p
};

/// All (p - 1) p^2 elements, ordered by index. Throws PrimeTooLarge for p > 31.
std::vector<GroupElement> enumerate_group(const Prime& p);

enum class ClassType { kType1, kType2a, kType2b, kType3, kType4 };

const char* to_string(ClassType t) noexcept;

/// Conjugacy classes labelled C_1 .. C_{2p} in the order of the standard
/// census: C_1..C_{p-1} Type 1, C_p and C_{p+1} Type 2, C_{p+2} = {I},
/// C_{p+2+m} = { x = g^m } for m = 1..p-2.
struct ConjugacyPartition {
  Prime prime;
  Residue generator;                            // primitive root g
  std::vector<std::vector<std::size_t>> classes;  // classes[k-1]: element indices of C_k
  std::vector<GroupElement> representative;     // canonical z(k) in C_k
  std::vector<ClassType> type;
  std::vector<std::size_t> class_of;            // element index -> k - 1

  std::size_t count() const noexcept { return classes.size(); }
  /// |C_k|, 1-based k.
  std::size_t size(std::size_t k) const { return classes.at(k - 1).size(); }
};

/// Orbit closure under conjugation by (g,0,0), (1,1,0), (1,0,1), then
/// labelling by class invariants. Throws CensusMismatch if the result
/// differs from the expected 2p classes and sizes.
ConjugacyPartition conjugacy_classes(const Group& group);

nlohmann::json census_to_json(const ConjugacyPartition& partition);

/// #{(X, Y) in C_i x C_j : X Y = z}, with z the stored representative of C_k.
/// Indices are 1-based in [1, 2p].
std::int64_t class_coefficient_bruteforce(const Group& group, const ConjugacyPartition& partition,
                                          std::size_t i, std::size_t j, std::size_t k);
/// Same count against an explicit target z.
std::int64_t class_coefficient_bruteforce(const Group& group, const ConjugacyPartition& partition,
                                          std::size_t i, std::size_t j, const GroupElement& z);

/// M_i = (c_{i,j,k})_{j,k}, the full 2p x 2p class-multiplication matrix.
IntMatrix class_matrix_bruteforce(const Group& group, const ConjugacyPartition& partition,
                                  std::size_t i);

/// Character table: entries(r, k) = chi_{r+1}(C_{k+1}).
struct CharacterTable {
  Prime prime;
  ComplexMatrix entries;
  std::complex<double> xi;               // exp(2 pi i / (p - 1))
  std::vector<std::int64_t> class_sizes;  // |C_k|
  std::vector<std::int64_t> dimensions;   // chi_k(C_{p+2})

  std::size_t count() const noexcept { return entries.rows(); }
  /// chi_r(C_k), 1-based.
  std::complex<double> value(std::size_t r, std::size_t k) const { return entries(r - 1, k - 1); }
  /// (1/|G|) sum_k |C_k| chi_a(C_k) conj(chi_b(C_k)), 1-based.
  std::complex<double> inner_product(std::size_t a, std::size_t b) const;
};

/// Assembles the table from K values; throws OrthogonalityFailure if any
/// row inner product is off by more than 1e-6.
CharacterTable build_character_table(const KloostermanTable& table);

/// Rows "chi_r,a+bi,..." with a header row of class labels.
std::string character_table_to_csv(const CharacterTable& table);

struct LemmaResiduals {
  double similarity = 0.0;          // max |M_i W - W D_i|
  double unitary_similarity = 0.0;  // max |T_i U - U D_i|, T_i = Q^-1 M_i Q
  double unitarity = 0.0;           // max |U* U - I|
};

/// Full-size check of the class-algebra diagonalization for class i in
/// [1, 2p]. Requires p <= kMaxLemmaPrime.
LemmaResiduals verify_lemma_full(const Group& group, const ConjugacyPartition& partition,
                                 const CharacterTable& characters, std::size_t i);

}  // namespace kloos

#endif  // KLOOS_GROUP_ORACLE_HPP
