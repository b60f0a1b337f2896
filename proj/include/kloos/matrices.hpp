// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KLOOS_MATRICES_HPP
#define KLOOS_MATRICES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kloos/dense.hpp"
#include "kloos/kloosterman.hpp"
#include "kloos/modular.hpp"

#include <json.hpp>

namespace kloos {

// Indices i, j, k in this header are 1-based, as in c_{i,j,k}; the matrices
// themselves are stored 0-based, so c_{i,j,k} == B(j - 1, k - 1).

/// i^2 + j^2 + k^2 - 2ij - 2jk - 2ik, unreduced.
constexpr std::int64_t beta(std::int64_t i, std::int64_t j, std::int64_t k) noexcept {
  return i * i + j * j + k * k - 2 * i * j - 2 * j * k - 2 * i * k;
}

/// c_{i,j,k} = 1 + (beta(i,j,k) / p), for i, j, k in [1, p-1].
int class_coefficient(const Prime& p, std::int64_t i, std::int64_t j, std::int64_t k);

enum class KPrecision {
  kFloat,     ///< table.approx
  kExtended,  ///< exact elements embedded in long double, then rounded
};

/// The (p+2)-truncated family attached to one Type-1 class index i.
///
/// T_i has B_i in its upper-left (p-1) block, the two Type-2 border rows
/// and columns (ones except a zero at position i), and sqrt(f) at
/// (i, p+2) and (p+2, i). A_i is the p x p principal submatrix of T_i.
struct ClassMatrices {
  Prime prime;
  std::int64_t index;
  IntMatrix B;            // (p-1) x (p-1)
  IntMatrix A;            // p x p
  RealMatrix T;           // (p+2) x (p+2)
  std::vector<double> D;  // diagonal of D_i, length p+2
  RealMatrix U;           // (p+2) x (p+2), independent of i

  /// c_{index, j, k}.
  long long c(std::int64_t j, std::int64_t k) const { return B(j - 1, k - 1); }
  RealMatrix D_matrix() const;
};

/// B_i alone, from the closed form.
IntMatrix build_b(const Prime& p, std::int64_t i);

/// A_i: B_i bordered by one Type-2 row and column (ones, zero at i and at the corner).
IntMatrix build_a(const Prime& p, std::int64_t i);

/// Throws InvalidArgument unless 1 <= i <= p - 1.
ClassMatrices build_class_matrices(const KloostermanTable& table, std::int64_t i,
                                   KPrecision precision = KPrecision::kFloat);

/// The shared orthogonal matrix U of the truncated family.
RealMatrix build_truncated_u(const KloostermanTable& table,
                             KPrecision precision = KPrecision::kFloat);

struct DiagonalizationResidual {
  double eigen_residual = 0.0;          // max |T_i U - U D_i|
  double orthogonality_residual = 0.0;  // max |U^T U - I|
  double involution_residual = 0.0;     // max |U^2 - I|
  bool pass = false;
};

DiagonalizationResidual verify_truncated_diagonalization(const ClassMatrices& m, double tol);

struct EntryCensus {
  std::int64_t zeros = 0;
  std::int64_t ones = 0;
  std::int64_t twos = 0;
  friend bool operator==(const EntryCensus&, const EntryCensus&) = default;
};

/// Expected census of row j of B_i, keyed by j == i and (ij / p).
EntryCensus expected_row_census(const Prime& p, std::int64_t i, std::int64_t j);
/// Expected census of all of B_i.
EntryCensus expected_total_census(const Prime& p);

struct MagicReport {
  std::int64_t p = 0;
  std::int64_t index = 0;
  std::vector<std::int64_t> row_sums;  // of B
  std::vector<std::int64_t> col_sums;
  std::int64_t diagonal_sum = 0;
  std::map<std::int64_t, std::int64_t> broken_diagonal_sums;  // r -> sum over {(j, r j)}
  EntryCensus total;
  std::vector<EntryCensus> row_census;
  std::int64_t diagonal_one_position = 0;  // the unique j with B(j, j) = 1
  std::int64_t trace = 0;
  std::int64_t trace_of_square = 0;
  std::vector<std::int64_t> a_row_sums;  // of A
};

/// Computes and checks every row, column, diagonal and census property of
/// B_i and A_i; throws MagicViolation naming the first property that fails.
MagicReport magic_report(const ClassMatrices& m);

nlohmann::json magic_report_to_json(const MagicReport& report);

struct MagicVariants {
  IntMatrix b_prime;  // B_i with c_{i,i,i} decremented
  IntMatrix a;        // A_i
};

MagicVariants magic_variants(const ClassMatrices& m);

/// Sum over the ratio class {(j, r j mod p)} of a (p-1) x (p-1) block, r a unit.
std::int64_t broken_diagonal_sum(const IntMatrix& b, const Prime& p, std::int64_t r);

/// Integers printed exactly, everything else with 17 significant digits.
std::string matrix_to_csv(const RealMatrix& m);
std::string matrix_to_csv(const IntMatrix& m);
nlohmann::json class_matrices_to_json(const ClassMatrices& m);

}  // namespace kloos

#endif  // KLOOS_MATRICES_HPP
