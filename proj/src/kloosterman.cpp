// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#include "kloos/kloosterman.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "kloos/errors.hpp"
#include "kloos/summation.hpp"

namespace kloos {
namespace {

double cos_frac(std::int64_t k, std::int64_t p) {
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p));
}

}  // namespace

double kloosterman_direct(Residue a, Residue b) {
  const Prime& prime = a.modulus();
  const std::int64_t p = prime.value();
  CompensatedSum<double> sum;
  for (std::int64_t n = 1; n < p; ++n) {
    const std::int64_t e = prime.reduce(a.value() * n + b.value() * inverse_mod(n, prime));
    sum += cos_frac(e, p);
  }
  return sum.value();
}

double kloosterman_legendre(Residue u) {
  const Prime& prime = u.modulus();
  const std::int64_t p = prime.value();
  CompensatedSum<double> sum;
  for (std::int64_t n = 0; n < p; ++n) {
    const int symbol = legendre(n * n - 4 * u.value(), prime);
    if (symbol != 0) sum += symbol * cos_frac(n, p);
  }
  return sum.value();
}

std::vector<std::int64_t> kloosterman_cyclic(Residue u) {
  const Prime& prime = u.modulus();
  const std::int64_t p = prime.value();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
  for (std::int64_t n = 1; n < p; ++n) {
    ++counts[static_cast<std::size_t>(prime.reduce(n + u.value() * inverse_mod(n, prime)))];
  }
  return counts;
}

CyclotomicInt kloosterman_exact(Residue u) {
  return CyclotomicInt::from_cyclic(u.modulus(), kloosterman_cyclic(u));
}

double KloostermanTable::max_abs() const {
  double m = 0.0;
  for (double v : approx) m = std::max(m, std::abs(v));
  return m;
}

double KloostermanTable::max_abs_nonzero() const {
  double m = 0.0;
  for (std::size_t u = 1; u < approx.size(); ++u) m = std::max(m, std::abs(approx[u]));
  return m;
}

KloostermanTable build_table(const Prime& p) {
  KloostermanTable table{p, {}, {}};
  const std::int64_t n = p.value();
  table.exact.reserve(static_cast<std::size_t>(n));
  table.approx.reserve(static_cast<std::size_t>(n));
  for (std::int64_t u = 0; u < n; ++u) {
    table.exact.push_back(kloosterman_exact(Residue(p, u)));
    table.approx.push_back(kloosterman_direct(Residue(p, 1), Residue(p, u)));
  }

  // Values within 1e-6 of each other must still be different elements.
  std::vector<std::size_t> order(static_cast<std::size_t>(n - 1));
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return table.approx[a] < table.approx[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    const std::size_t a = order[k - 1], b = order[k];
    if (table.approx[b] - table.approx[a] < 1e-6 && table.exact[a] == table.exact[b]) {
      throw DistinctnessViolation("K(" + std::to_string(a) + ") == K(" + std::to_string(b) +
                                  ") for p = " + std::to_string(n));
    }
  }
  return table;
}

std::string table_to_csv(const KloostermanTable& table) {
  std::ostringstream os;
  os.precision(17);
  os << "u,K_float\n";
  for (std::size_t u = 0; u < table.approx.size(); ++u) os << u << ',' << table.approx[u] << '\n';
  return os.str();
}

nlohmann::json table_to_json(const KloostermanTable& table, bool include_exact) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t u = 0; u < table.approx.size(); ++u) {
    nlohmann::json row{{"u", u}, {"K_float", table.approx[u]}};
    if (include_exact) {
      const auto c = table.exact[u].coeffs();
      row["exact"] = std::vector<std::int64_t>(c.begin(), c.end());
    }
    rows.push_back(std::move(row));
  }
  return {{"p", table.p()}, {"basis", "zeta^0..zeta^(p-2)"}, {"values", std::move(rows)}};
}

}  // namespace kloos
