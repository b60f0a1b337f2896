// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#include "kloos/matrices.hpp"

#include <cmath>
#include <sstream>

#include "kloos/errors.hpp"

namespace kloos {
namespace {

void check_index(const Prime& p, std::int64_t i, const char* what) {
  if (i < 1 || i > p.f()) {
    throw InvalidArgument(std::string(what) + " must lie in [1, p-1], got " + std::to_string(i));
  }
}

std::vector<double> k_values(const KloostermanTable& table, KPrecision precision) {
  if (precision == KPrecision::kFloat) return table.approx;
  std::vector<double> out;
  out.reserve(table.exact.size());
  for (const auto& e : table.exact) {
    out.push_back(static_cast<double>(e.real_embedding_as<long double>()));
  }
  return out;
}

[[noreturn]] void violation(const ClassMatrices& m, const std::string& property,
                            const std::string& detail) {
  throw MagicViolation(property + ": " + detail + " (p = " + std::to_string(m.prime.value()) +
                       ", i = " + std::to_string(m.index) + ")");
}

}  // namespace

int class_coefficient(const Prime& p, std::int64_t i, std::int64_t j, std::int64_t k) {
  check_index(p, i, "i");
  check_index(p, j, "j");
  check_index(p, k, "k");
  return 1 + legendre(beta(i, j, k), p);
}

RealMatrix ClassMatrices::D_matrix() const {
  RealMatrix d(D.size(), D.size());
  for (std::size_t k = 0; k < D.size(); ++k) d(k, k) = D[k];
  return d;
}

IntMatrix build_b(const Prime& p, std::int64_t i) {
  check_index(p, i, "i");
  const auto f = static_cast<std::size_t>(p.f());
  // Quadratic character by table: 1 + (x / p) for every residue x.
  std::vector<int> coefficient(f + 1, 0);
  coefficient[0] = 1;
  for (std::int64_t x = 1; x <= p.f(); ++x) coefficient[static_cast<std::size_t>(p.reduce(x * x))] = 2;
  IntMatrix b(f, f);
  for (std::size_t j = 0; j < f; ++j) {
    for (std::size_t k = j; k < f; ++k) {
      const std::int64_t bt = beta(i, static_cast<std::int64_t>(j + 1), static_cast<std::int64_t>(k + 1));
      const int c = coefficient[static_cast<std::size_t>(p.reduce(bt))];
      b(j, k) = c;
      b(k, j) = c;
    }
  }
  return b;
}

IntMatrix build_a(const Prime& p, std::int64_t i) {
  const IntMatrix b = build_b(p, i);
  const std::size_t f = b.rows();
  IntMatrix a(f + 1, f + 1);
  for (std::size_t j = 0; j < f; ++j) {
    for (std::size_t k = 0; k < f; ++k) a(j, k) = b(j, k);
    a(j, f) = a(f, j) = static_cast<std::int64_t>(j + 1) == i ? 0 : 1;
  }
  return a;
}

RealMatrix build_truncated_u(const KloostermanTable& table, KPrecision precision) {
  const Prime& prime = table.modulus;
  const std::vector<double> kv = k_values(table, precision);
  const std::int64_t p = prime.value();
  const auto n = static_cast<std::size_t>(p);
  const double inv_p = 1.0 / static_cast<double>(p);
  const double f = static_cast<double>(prime.f());
  const double root_f = std::sqrt(f);

  // Rows/columns 0..p-2 are Type 1, p-1 and p are Type 2, p+1 is {I}.
  RealMatrix u(n + 2, n + 2);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      u(j, k) = kv[static_cast<std::size_t>(prime.reduce(static_cast<std::int64_t>((j + 1) * (k + 1))))] * inv_p;
    }
    u(j, n - 1) = u(j, n) = u(n - 1, j) = u(n, j) = -inv_p;
    u(j, n + 1) = u(n + 1, j) = root_f * inv_p;
  }
  u(n - 1, n - 1) = u(n, n) = f * inv_p;
  u(n - 1, n) = u(n, n - 1) = -inv_p;
  u(n - 1, n + 1) = u(n, n + 1) = u(n + 1, n - 1) = u(n + 1, n) = root_f * inv_p;
  u(n + 1, n + 1) = inv_p;
  return u;
}

ClassMatrices build_class_matrices(const KloostermanTable& table, std::int64_t i,
                                   KPrecision precision) {
  const Prime& prime = table.modulus;
  check_index(prime, i, "i");
  const auto n = static_cast<std::size_t>(prime.value());
  const auto f = n - 1;
  const auto row_i = static_cast<std::size_t>(i - 1);
  const double root_f = std::sqrt(static_cast<double>(f));

  ClassMatrices m{prime, i, build_b(prime, i), build_a(prime, i), RealMatrix(n + 2, n + 2), {}, {}};

  for (std::size_t j = 0; j < f; ++j) {
    for (std::size_t k = 0; k < f; ++k) m.T(j, k) = static_cast<double>(m.B(j, k));
    const long long border = j == row_i ? 0 : 1;
    for (const std::size_t type2 : {f, f + 1}) {
      m.T(j, type2) = m.T(type2, j) = static_cast<double>(border);
    }
  }
  m.T(f, f + 1) = m.T(f + 1, f) = 1.0;
  m.T(row_i, n + 1) = m.T(n + 1, row_i) = root_f;

  const std::vector<double> kv = k_values(table, precision);
  m.D.reserve(n + 2);
  for (std::size_t k = 1; k <= f; ++k) {
    m.D.push_back(kv[static_cast<std::size_t>(prime.reduce(static_cast<std::int64_t>(k) * i))]);
  }
  m.D.insert(m.D.end(), {-1.0, -1.0, static_cast<double>(f)});
  m.U = build_truncated_u(table, precision);
  return m;
}

DiagonalizationResidual verify_truncated_diagonalization(const ClassMatrices& m, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  DiagonalizationResidual r;
  r.eigen_residual = max_abs_diff(multiply(m.T, m.U), scale_columns<double>(m.U, m.D));
  const RealMatrix id = RealMatrix::identity(m.U.rows());
  r.orthogonality_residual = max_abs_diff(multiply(transpose(m.U), m.U), id);
  r.involution_residual = max_abs_diff(multiply(m.U, m.U), id);
  r.pass = r.eigen_residual < tol && r.orthogonality_residual < tol;
  return r;
}

EntryCensus expected_row_census(const Prime& p, std::int64_t i, std::int64_t j) {
  const std::int64_t q = p.value();
  if (i == j) return {(q - 1) / 2, 1, (q - 3) / 2};
  if (legendre(i * j, p) == 1) return {(q - 1) / 2, 2, (q - 5) / 2};
  return {(q + 1) / 2, 0, (q - 3) / 2};
}

EntryCensus expected_total_census(const Prime& p) {
  const std::int64_t q = p.value();
  return {q * (q - 1) / 2, q - 2, (q - 2) * (q - 3) / 2};
}

std::int64_t broken_diagonal_sum(const IntMatrix& b, const Prime& p, std::int64_t r) {
  std::int64_t sum = 0;
  for (std::int64_t j = 1; j < p.value(); ++j) {
    sum += b(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(p.reduce(r * j) - 1));
  }
  return sum;
}

MagicReport magic_report(const ClassMatrices& m) {
  const Prime& prime = m.prime;
  const std::int64_t p = prime.value();
  const std::int64_t i = m.index;
  const auto f = static_cast<std::size_t>(prime.f());
  const IntMatrix& b = m.B;

  MagicReport r;
  r.p = p;
  r.index = i;
  r.row_sums.assign(f, 0);
  r.col_sums.assign(f, 0);
  r.row_census.assign(f, {});
  for (std::size_t j = 0; j < f; ++j) {
    for (std::size_t k = 0; k < f; ++k) {
      const long long c = b(j, k);
      if (c < 0 || c > 2) violation(m, "entry range", "B(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ") = " + std::to_string(c));
      if (c != b(k, j)) violation(m, "symmetry", "B is not symmetric");
      r.row_sums[j] += c;
      r.col_sums[k] += c;
      r.trace_of_square += c * b(k, j);
      auto& row = r.row_census[j];
      (c == 0 ? row.zeros : c == 1 ? row.ones : row.twos) += 1;
    }
    r.trace += b(j, j);
    if (b(j, j) == 1) {
      if (r.diagonal_one_position != 0) violation(m, "diagonal ones", "more than one diagonal 1");
      r.diagonal_one_position = static_cast<std::int64_t>(j + 1);
    }
    r.total.zeros += r.row_census[j].zeros;
    r.total.ones += r.row_census[j].ones;
    r.total.twos += r.row_census[j].twos;
  }
  r.diagonal_sum = r.trace;

  for (std::size_t j = 0; j < f; ++j) {
    const std::int64_t want = static_cast<std::int64_t>(j + 1) == i ? p - 2 : p - 3;
    if (r.row_sums[j] != want) violation(m, "row sum", "row " + std::to_string(j + 1) + " sums to " + std::to_string(r.row_sums[j]) + ", expected " + std::to_string(want));
    if (r.col_sums[j] != want) violation(m, "column sum", "column " + std::to_string(j + 1) + " sums to " + std::to_string(r.col_sums[j]) + ", expected " + std::to_string(want));
  }
  if (r.trace != p - 2) violation(m, "trace", "tr B = " + std::to_string(r.trace));
  const std::int64_t quarter = inverse_mod(4, prime);
  if (r.diagonal_one_position != prime.reduce(i * quarter)) {
    violation(m, "diagonal ones", "the diagonal 1 sits at j = " + std::to_string(r.diagonal_one_position));
  }
  for (std::int64_t ratio = 1; ratio < p; ++ratio) {
    const std::int64_t s = broken_diagonal_sum(b, prime, ratio);
    r.broken_diagonal_sums[ratio] = s;
    const std::int64_t want = ratio == 1 ? p - 2 : p - 3;
    if (s != want) violation(m, "broken diagonal", "ratio " + std::to_string(ratio) + " sums to " + std::to_string(s));
  }
  if (r.trace_of_square != 2 * p * p - 9 * p + 10) {
    violation(m, "trace of square", "tr B^2 = " + std::to_string(r.trace_of_square));
  }
  for (std::size_t j = 0; j < f; ++j) {
    if (!(r.row_census[j] == expected_row_census(prime, i, static_cast<std::int64_t>(j + 1)))) {
      violation(m, "row census", "row " + std::to_string(j + 1));
    }
  }
  if (!(r.total == expected_total_census(prime))) violation(m, "total census", "B entry counts");

  const std::size_t n = m.A.rows();
  r.a_row_sums.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t col = 0;
    for (std::size_t k = 0; k < n; ++k) {
      r.a_row_sums[j] += m.A(j, k);
      col += m.A(k, j);
    }
    if (r.a_row_sums[j] != p - 2 || col != p - 2) violation(m, "A line sum", "row/column " + std::to_string(j + 1) + " of A");
  }

  const IntMatrix bp = magic_variants(m).b_prime;
  for (std::size_t j = 0; j < f; ++j) {
    std::int64_t row = 0, col = 0;
    for (std::size_t k = 0; k < f; ++k) {
      row += bp(j, k);
      col += bp(k, j);
    }
    if (row != p - 3 || col != p - 3) violation(m, "B' line sum", "row/column " + std::to_string(j + 1) + " of B'");
  }
  for (std::int64_t ratio = 1; ratio < p; ++ratio) {
    if (broken_diagonal_sum(bp, prime, ratio) != p - 3) violation(m, "B' broken diagonal", "ratio " + std::to_string(ratio));
  }
  return r;
}

nlohmann::json magic_report_to_json(const MagicReport& r) {
  nlohmann::json broken = nlohmann::json::object();
  for (const auto& [ratio, sum] : r.broken_diagonal_sums) broken[std::to_string(ratio)] = sum;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : r.row_census) rows.push_back({c.zeros, c.ones, c.twos});
  return {{"p", r.p},
          {"i", r.index},
          {"row_sums", r.row_sums},
          {"col_sums", r.col_sums},
          {"diagonal_sum", r.diagonal_sum},
          {"broken_diagonal_sums", std::move(broken)},
          {"entry_census", {{"zeros", r.total.zeros}, {"ones", r.total.ones}, {"twos", r.total.twos}}},
          {"row_census", std::move(rows)},
          {"diagonal_one_position", r.diagonal_one_position},
          {"trace", r.trace},
          {"trace_of_square", r.trace_of_square},
          {"a_row_sums", r.a_row_sums}};
}

MagicVariants magic_variants(const ClassMatrices& m) {
  MagicVariants v{m.B, m.A};
  const auto ii = static_cast<std::size_t>(m.index - 1);
  v.b_prime(ii, ii) -= 1;
  return v;
}

namespace {

template <class T>
std::string csv_of(const Matrix<T>& m) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      const T v = m(r, c);
      if constexpr (std::is_floating_point_v<T>) {
        if (v == std::floor(v) && std::abs(v) < 1e15) {
          os << static_cast<long long>(v);
          continue;
        }
      }
      os << v;
    }
    os << '\n';
  }
  return os.str();
}

template <class T>
nlohmann::json rows_of(const Matrix<T>& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    out.push_back(std::vector<T>(row.begin(), row.end()));
  }
  return out;
}

}  // namespace

std::string matrix_to_csv(const RealMatrix& m) { return csv_of(m); }
std::string matrix_to_csv(const IntMatrix& m) { return csv_of(m); }

nlohmann::json class_matrices_to_json(const ClassMatrices& m) {
  return {{"p", m.prime.value()}, {"i", m.index}, {"B", rows_of(m.B)}, {"A", rows_of(m.A)},
          {"T", rows_of(m.T)},    {"D", m.D},       {"U", rows_of(m.U)}};
}

}  // namespace kloos
