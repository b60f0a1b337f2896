// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#include "kloos/identities.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>
#include <boost/rational.hpp>

#include "kloos/errors.hpp"
#include "kloos/matrices.hpp"
#include "kloos/summation.hpp"

namespace kloos {
namespace {

using Cyclic = std::vector<std::int64_t>;

Cyclic cyclic_square(const Cyclic& a) {
  Cyclic out(a.size(), 0);
  add_cyclic_product(out, a, a);
  return out;
}

struct Evaluator {
  const KloostermanTable& kt;
  IdentityMode mode;
  double tol;
  std::vector<IdentityResult> results;

  void record_exact(std::string id, std::int64_t expected, const CyclotomicInt& value) {
    IdentityResult r;
    r.id = std::move(id);
    r.expected = expected;
    r.observed = value.real_embedding();
    r.pass = value.as_integer() == expected;
    r.exact = value;
    r.mode = IdentityMode::kExact;
    results.push_back(std::move(r));
  }

  void record_float(std::string id, std::int64_t expected, double value) {
    IdentityResult r;
    r.id = std::move(id);
    r.expected = expected;
    r.observed = value;
    r.pass = std::abs(value - static_cast<double>(expected)) <= tol;
    r.mode = IdentityMode::kFloat;
    results.push_back(std::move(r));
  }
};

void run_exact(Evaluator& ev) {
  const Prime& prime = ev.kt.modulus;
  const std::int64_t p = prime.value();
  const auto np = static_cast<std::size_t>(p);

  std::vector<Cyclic> k(np), sq(np);
  for (std::size_t u = 0; u < np; ++u) {
    k[u] = ev.kt.exact[u].to_cyclic();
    sq[u] = cyclic_square(k[u]);
  }

  CyclicAccumulator trace(prime), sos(prime), cubic(prime);
  for (std::size_t u = 0; u < np; ++u) {
    trace.add(k[u]);
    sos.add(sq[u]);
    cubic.add_product(sq[u], k[u]);
  }
  const CyclotomicInt sos_value = sos.result();
  ev.record_exact("trace", 0, trace.result());
  ev.record_exact("sos", expected_sos(prime), sos_value);
  ev.record_exact("cubic", expected_cubic(prime), cubic.result());

  // Sum_u K(cu)^2 = Sum_u K(u)^2 for c a unit, so both KSOS forms expand to
  // 2 sos -+ 2 orthogonal(c) without leaving Z[zeta].
  std::vector<CyclotomicInt> orthogonal;
  orthogonal.reserve(np);
  for (std::int64_t c = 2; c < p; ++c) {
    CyclicAccumulator acc(prime);
    for (std::int64_t u = 0; u < p; ++u) {
      acc.add_product(k[static_cast<std::size_t>(u)],
                      k[static_cast<std::size_t>(prime.reduce(c * u))]);
    }
    orthogonal.push_back(acc.result());
    ev.record_exact("orthogonal:c=" + std::to_string(c), expected_orthogonal(prime), orthogonal.back());
  }
  for (std::int64_t c = 2; c < p; ++c) {
    const CyclotomicInt value = (sos_value - orthogonal[static_cast<std::size_t>(c - 2)]) * 2;
    ev.record_exact("ksos_minus:c=" + std::to_string(c), expected_ksos_minus(prime), value);
  }
  for (std::int64_t c = 2; c < p; ++c) {
    const CyclotomicInt value = (sos_value + orthogonal[static_cast<std::size_t>(c - 2)]) * 2;
    ev.record_exact("ksos_plus:c=" + std::to_string(c), expected_ksos_plus(prime), value);
  }
  for (std::int64_t j = 1; j < p; ++j) {
    CyclicAccumulator acc(prime);
    for (std::int64_t u = 0; u < p; ++u) {
      acc.add_product(sq[static_cast<std::size_t>(u)],
                      sq[static_cast<std::size_t>(prime.reduce(j * u))]);
    }
    ev.record_exact("quartic:j=" + std::to_string(j), expected_quartic(prime, j), acc.result());
  }
}

void run_float(Evaluator& ev) {
  const Prime& prime = ev.kt.modulus;
  const std::int64_t p = prime.value();
  const KloostermanTable& kt = ev.kt;

  CompensatedSum<double> trace, sos, cubic;
  for (std::int64_t u = 0; u < p; ++u) {
    const double x = kt[u];
    trace += x;
    sos += x * x;
    cubic += x * x * x;
  }
  ev.record_float("trace", 0, trace.value());
  ev.record_float("sos", expected_sos(prime), sos.value());
  ev.record_float("cubic", expected_cubic(prime), cubic.value());

  auto pair_sum = [&](std::int64_t c, auto term) {
    CompensatedSum<double> s;
    for (std::int64_t u = 0; u < p; ++u) s += term(kt[u], kt[c * u]);
    return s.value();
  };
  for (std::int64_t c = 2; c < p; ++c) {
    ev.record_float("orthogonal:c=" + std::to_string(c), expected_orthogonal(prime),
                    pair_sum(c, [](double a, double b) { return a * b; }));
  }
  for (std::int64_t c = 2; c < p; ++c) {
    ev.record_float("ksos_minus:c=" + std::to_string(c), expected_ksos_minus(prime),
                    pair_sum(c, [](double a, double b) { return (a - b) * (a - b); }));
  }
  for (std::int64_t c = 2; c < p; ++c) {
    ev.record_float("ksos_plus:c=" + std::to_string(c), expected_ksos_plus(prime),
                    pair_sum(c, [](double a, double b) { return (a + b) * (a + b); }));
  }
  for (std::int64_t j = 1; j < p; ++j) {
    ev.record_float("quartic:j=" + std::to_string(j), expected_quartic(prime, j),
                    pair_sum(j, [](double a, double b) { return a * a * b * b; }));
  }
}

}  // namespace

std::string to_string(IdentityMode mode) {
  return mode == IdentityMode::kExact ? "exact" : "float";
}

bool IdentityReport::pass() const noexcept { return first_failure() == nullptr; }

const IdentityResult* IdentityReport::first_failure() const noexcept {
  for (const auto& r : results) {
    if (!r.pass) return &r;
  }
  return nullptr;
}

const IdentityResult* IdentityReport::find(const std::string& id) const noexcept {
  for (const auto& r : results) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::int64_t expected_sos(const Prime& p) noexcept { return p.value() * p.value() - p.value(); }

std::int64_t expected_cubic(const Prime& p) noexcept {
  const std::int64_t q = p.value();
  return (q % 3 == 1 ? q * q : -q * q) + 2 * q;
}

std::int64_t expected_orthogonal(const Prime& p) noexcept { return -p.value(); }
std::int64_t expected_ksos_minus(const Prime& p) noexcept { return 2 * p.value() * p.value(); }

std::int64_t expected_ksos_plus(const Prime& p) noexcept {
  return 2 * p.value() * p.value() - 4 * p.value();
}

std::int64_t expected_quartic(const Prime& p, std::int64_t j) {
  const std::int64_t q = p.value();
  const std::int64_t r = p.reduce(j);
  if (r == 0) throw InvalidArgument("quartic identity needs j to be a unit mod p");
  const std::int64_t q2 = q * q, q3 = q2 * q;
  if (r == 1) return 2 * q3 - 3 * q2 - 3 * q;
  return legendre(r, p) == 1 ? q3 - 3 * q2 - 3 * q : q3 - q2 - 3 * q;
}

IdentityReport identity_suite(const KloostermanTable& kt, IdentityMode mode) {
  const double p = static_cast<double>(kt.p());
  Evaluator ev{kt, mode, 1e-6 * p * p * p, {}};
  if (mode == IdentityMode::kExact) {
    run_exact(ev);
  } else {
    run_float(ev);
  }
  return IdentityReport{kt.modulus, mode, std::move(ev.results)};
}

nlohmann::json identity_report_to_json(const IdentityReport& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json row{{"id", r.id}, {"expected", r.expected}, {"observed", r.observed}, {"pass", r.pass}};
    if (r.exact) row["exact"] = r.exact->to_string();
    results.push_back(std::move(row));
  }
  return {{"p", report.prime.value()},
          {"mode", to_string(report.mode)},
          {"pass", report.pass()},
          {"results", std::move(results)}};
}

std::vector<std::int64_t> exact_power_sums(const KloostermanTable& kt) {
  const Prime& prime = kt.modulus;
  CyclicAccumulator s1(prime), s2(prime), s3(prime), s4(prime);
  for (const CyclotomicInt& value : kt.exact) {
    const Cyclic k = value.to_cyclic();
    const Cyclic sq = cyclic_square(k);
    s1.add(k);
    s2.add(sq);
    s3.add_product(sq, k);
    s4.add_product(sq, sq);
  }
  std::vector<std::int64_t> out{kt.p()};
  int m = 1;
  for (const auto* acc : {&s1, &s2, &s3, &s4}) {
    const auto value = acc->result().as_integer();
    if (!value) {
      throw NonIntegerCoefficient("power sum " + std::to_string(m) + " is not a rational integer (p = " +
                                  std::to_string(kt.p()) + ")");
    }
    out.push_back(*value);
    ++m;
  }
  return out;
}

std::vector<std::int64_t> newton_coefficients(const std::vector<std::int64_t>& power_sums) {
  using Q = boost::rational<long long>;
  std::vector<Q> c{Q(1)};
  for (std::size_t j = 1; j < power_sums.size(); ++j) {
    Q acc(0);
    for (std::size_t m = 1; m <= j; ++m) acc += c[j - m] * Q(power_sums[m]);
    c.push_back(-acc / Q(static_cast<long long>(j)));
  }
  std::vector<std::int64_t> out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].denominator() != 1) {
      throw NonIntegerCoefficient("c" + std::to_string(j) + " = " + std::to_string(c[j].numerator()) +
                                  "/" + std::to_string(c[j].denominator()));
    }
    out.push_back(c[j].numerator());
  }
  return out;
}

CharPolyCoefficients charpoly_coefficients(const KloostermanTable& kt) {
  std::vector<std::int64_t> sums = exact_power_sums(kt);
  std::vector<std::int64_t> c = newton_coefficients(sums);
  return CharPolyCoefficients{kt.modulus, std::move(sums), std::move(c)};
}

std::int64_t expected_c2(const Prime& p) noexcept {
  const std::int64_t q = p.value();
  return -(q * q - q) / 2;
}

std::int64_t expected_c3(const Prime& p) noexcept {
  const std::int64_t q = p.value();
  return -q * (legendre(-3, p) * q + 2) / 3;
}

std::int64_t expected_c4(const Prime& p) noexcept {
  const std::int64_t q = p.value();
  return q * (q - 3) * (q * q - 3 * q - 2) / 8;
}

BoundsReport bounds_report(const KloostermanTable& kt) {
  const double p = static_cast<double>(kt.p());
  BoundsReport r;
  r.p = kt.p();
  r.max_abs = kt.max_abs();
  r.max_abs_nonzero = kt.max_abs_nonzero();
  r.kloosterman_bound = std::pow(2.0, 0.25) * std::pow(p, 0.75);
  r.weil_bound = 2.0 * std::sqrt(p);
  r.lower_bound = std::sqrt(2.0) * std::sqrt(p - 1.0);
  r.kloosterman_ok = r.max_abs < r.kloosterman_bound;
  r.weil_ok = r.max_abs_nonzero <= r.weil_bound;
  r.lower_ok = r.max_abs >= r.lower_bound;
  return r;
}

nlohmann::json bounds_report_to_json(const BoundsReport& r) {
  return {{"p", r.p},
          {"max_abs", r.max_abs},
          {"max_abs_nonzero", r.max_abs_nonzero},
          {"kloosterman", {{"bound", r.kloosterman_bound}, {"margin", r.kloosterman_margin()}, {"pass", r.kloosterman_ok}}},
          {"weil", {{"bound", r.weil_bound}, {"margin", r.weil_margin()}, {"pass", r.weil_ok}}},
          {"lower", {{"bound", r.lower_bound}, {"margin", r.lower_margin()}, {"pass", r.lower_ok}}},
          {"pass", r.pass()}};
}

RealMatrix companion_matrix(const Prime& p) {
  const std::int64_t f = p.f();
  const auto n = static_cast<std::size_t>(p.value());
  const IntMatrix b = build_b(p, 1);
  RealMatrix m(n, n);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t k = 0; k + 1 < n; ++k) m(j, k) = static_cast<double>(b(j, k));
    m(j, n - 1) = 1.0;
  }
  for (std::size_t k = 0; k + 1 < n; ++k) m(0, k) -= static_cast<double>(f);
  m(0, n - 1) = -static_cast<double>(f);
  for (std::size_t k = 1; k + 1 < n; ++k) m(n - 1, k) = 2.0;
  m(n - 1, n - 1) = 1.0;
  return m;
}

CompanionReport companion_report(const KloostermanTable& kt) {
  const RealMatrix m = companion_matrix(kt.modulus);
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) e(j, k) = m(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
  }
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(e, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NoConvergence("companion eigenvalue iteration failed");

  CompanionReport r;
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::complex<double> z = solver.eigenvalues()[j];
    r.eigenvalues.push_back(z.real());
    r.max_imag = std::max(r.max_imag, std::abs(z.imag()));
  }
  r.expected = kt.approx;
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
  std::sort(r.expected.begin(), r.expected.end());
  for (std::size_t j = 0; j < r.expected.size(); ++j) {
    r.max_deviation = std::max(r.max_deviation, std::abs(r.eigenvalues[j] - r.expected[j]));
  }
  return r;
}

}  // namespace kloos
