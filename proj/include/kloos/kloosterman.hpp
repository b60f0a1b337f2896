// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KLOOS_KLOOSTERMAN_HPP
#define KLOOS_KLOOSTERMAN_HPP

#include <string>
#include <vector>

#include "kloos/cyclotomic.hpp"
#include "kloos/modular.hpp"

#include <json.hpp>

namespace kloos {

/// K(a, b) = sum_{n=1}^{p-1} cos(2 pi (a n + b n^{-1}) / p), compensated sum.
double kloosterman_direct(Residue a, Residue b);

/// K(u) = sum_{n=0}^{p-1} (n^2 - 4u / p) cos(2 pi n / p).
double kloosterman_legendre(Residue u);

/// K(u) as the element sum_n zeta^{n + u n^{-1}} of Z[zeta_p].
CyclotomicInt kloosterman_exact(Residue u);

/// Number of n in [1, p-1] with n + u n^{-1} = k, for k = 0..p-1. This is
/// the natural cyclic representative of K(u).
std::vector<std::int64_t> kloosterman_cyclic(Residue u);

/// K(u) = K(1, u) for u = 0..p-1, exact and in floating point.
struct KloostermanTable {
  Prime modulus;
  std::vector<CyclotomicInt> exact;
  std::vector<double> approx;

  std::int64_t p() const noexcept { return modulus.value(); }
  /// K(u) with u taken mod p.
  double operator[](std::int64_t u) const { return approx[static_cast<std::size_t>(modulus.reduce(u))]; }
  double max_abs() const;
  /// max |K(u)| over u in [1, p-1].
  double max_abs_nonzero() const;
};

/// Throws DistinctnessViolation if two of K(1..p-1) coincide exactly.
KloostermanTable build_table(const Prime& p);

/// "u,K_float" header then one row per u, 17 significant digits.
std::string table_to_csv(const KloostermanTable& table);
nlohmann::json table_to_json(const KloostermanTable& table, bool include_exact);

}  // namespace kloos

#endif  // KLOOS_KLOOSTERMAN_HPP
