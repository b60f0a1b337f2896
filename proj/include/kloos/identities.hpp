// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KLOOS_IDENTITIES_HPP
#define KLOOS_IDENTITIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kloos/cyclotomic.hpp"
#include "kloos/dense.hpp"
#include "kloos/kloosterman.hpp"
#include "kloos/modular.hpp"

#include <json.hpp>

namespace kloos {

enum class IdentityMode { kExact, kFloat };

std::string to_string(IdentityMode mode);

/// One evaluated identity. In exact mode `exact` holds the Z[zeta] value
/// and pass means it is the integer constant `expected`; `observed` is its
/// real embedding. In float mode pass means |observed - expected| <= 1e-6 p^3.
struct IdentityResult {
  std::string id;
  std::int64_t expected = 0;
  double observed = 0.0;
  std::optional<CyclotomicInt> exact;
  bool pass = false;
  IdentityMode mode = IdentityMode::kFloat;
};

/// Catalog, in order: trace, sos, cubic, orthogonal:c=2..p-1,
/// ksos_minus:c=2..p-1, ksos_plus:c=2..p-1, quartic:j=1..p-1.
struct IdentityReport {
  Prime prime;
  IdentityMode mode = IdentityMode::kFloat;
  std::vector<IdentityResult> results;

  bool pass() const noexcept;
  const IdentityResult* first_failure() const noexcept;
  const IdentityResult* find(const std::string& id) const noexcept;
};

// Closed forms on the right-hand sides.
std::int64_t expected_sos(const Prime& p) noexcept;
std::int64_t expected_cubic(const Prime& p) noexcept;
std::int64_t expected_orthogonal(const Prime& p) noexcept;
std::int64_t expected_ksos_minus(const Prime& p) noexcept;
std::int64_t expected_ksos_plus(const Prime& p) noexcept;
std::int64_t expected_quartic(const Prime& p, std::int64_t j);

IdentityReport identity_suite(const KloostermanTable& kt, IdentityMode mode);
nlohmann::json identity_report_to_json(const IdentityReport& report);

/// Exact power sums sum_u K(u)^m for m = 0..4, evaluated in Z[zeta].
/// Throws NonIntegerCoefficient if a sum is not a rational integer.
std::vector<std::int64_t> exact_power_sums(const KloostermanTable& kt);

struct BoundsReport {
  std::int64_t p = 0;
  double max_abs = 0.0;          // over all u
  double max_abs_nonzero = 0.0;  // over u >= 1
  double kloosterman_bound = 0.0;  // 2^{1/4} p^{3/4}
  double weil_bound = 0.0;         // 2 sqrt p
  double lower_bound = 0.0;        // sqrt 2 sqrt(p - 1)
  bool kloosterman_ok = false;
  bool weil_ok = false;
  bool lower_ok = false;

  double kloosterman_margin() const noexcept { return kloosterman_bound - max_abs; }
  double weil_margin() const noexcept { return weil_bound - max_abs_nonzero; }
  double lower_margin() const noexcept { return max_abs - lower_bound; }
  bool pass() const noexcept { return kloosterman_ok && weil_ok && lower_ok; }
};

BoundsReport bounds_report(const KloostermanTable& kt);
nlohmann::json bounds_report_to_json(const BoundsReport& report);

/// Leading coefficients of prod_u (x - K(u)) = x^p + c1 x^{p-1} + ...,
/// obtained from exact power sums by Newton's identities over Q.
struct CharPolyCoefficients {
  Prime prime;
  std::vector<std::int64_t> power_sums;  // index m = 0..4
  std::vector<std::int64_t> c;           // c0..c4
};

/// Throws NonIntegerCoefficient if a coefficient fails to be an integer.
CharPolyCoefficients charpoly_coefficients(const KloostermanTable& kt);

/// Newton recursion c_j = -(1/j) sum_{m=1}^{j} c_{j-m} s_m over exact
/// rationals, for power sums s_0..s_n.
std::vector<std::int64_t> newton_coefficients(const std::vector<std::int64_t>& power_sums);

std::int64_t expected_c2(const Prime& p) noexcept;
std::int64_t expected_c3(const Prime& p) noexcept;
std::int64_t expected_c4(const Prime& p) noexcept;

/// The p x p matrix whose eigenvalues are K_0, ..., K_{p-1}: the
/// coefficients c_{1,j,k} with the first row shifted by -f, a trailing
/// column (-f, 1, ..., 1) and bottom row (0, 2, ..., 2, 1).
RealMatrix companion_matrix(const Prime& p);

struct CompanionReport {
  std::vector<double> eigenvalues;  // real parts, ascending
  std::vector<double> expected;     // sorted K-table
  double max_imag = 0.0;
  double max_deviation = 0.0;       // max over sorted pairs
  bool pass(double tol = 1e-6) const noexcept { return max_imag <= tol && max_deviation <= tol; }
};

CompanionReport companion_report(const KloostermanTable& kt);

}  // namespace kloos

#endif  // KLOOS_IDENTITIES_HPP
