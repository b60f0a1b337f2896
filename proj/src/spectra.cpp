// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#include "kloos/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "kloos/errors.hpp"

namespace kloos {

Spectrum symmetric_eigenvalues(const RealMatrix& m, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (m.rows() != m.cols()) throw InvalidArgument("matrix must be square");
  const std::size_t n = m.rows();

  double frob2 = 0.0;
  for (const double v : m.data()) frob2 += v * v;
  const double frob = std::sqrt(frob2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-12 * frob) {
        throw InvalidArgument("matrix is not symmetric");
      }
    }
  }

  RealMatrix a = m;
  RealMatrix w = RealMatrix::identity(n);
  Spectrum out;
  const double threshold = tol * frob;
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
    double off2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = a.row(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) off2 += row[j] * row[j];
      }
    }
    if (std::sqrt(off2) <= threshold) {
      converged = true;
      out.sweeps = sweep;
      break;
    }
    if (sweep == kMaxJacobiSweeps) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation zeroing a(p, q): t = tan(phi) is the smaller root of
        // t^2 + 2 theta t - 1 = 0.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::abs(theta) > 1e150
                             ? 0.5 / theta
                             : std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Rows p and q are contiguous; the columns follow by symmetry.
        auto row_p = a.row(p);
        auto row_q = a.row(q);
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double apk = row_p[k], aqk = row_q[k];
          row_p[k] = c * apk - s * aqk;
          row_q[k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          a(k, p) = row_p[k];
          a(k, q) = row_q[k];
        }
        row_p[p] -= t * apq;
        row_q[q] += t * apq;
        row_p[q] = row_q[p] = 0.0;

        // Eigenvectors are kept as the rows of w = V^T.
        auto w_p = w.row(p);
        auto w_q = w.row(q);
        for (std::size_t k = 0; k < n; ++k) {
          const double vp = w_p[k], vq = w_q[k];
          w_p[k] = c * vp - s * vq;
          w_q[k] = s * vp + c * vq;
        }
      }
    }
  }
  if (!converged) {
    throw NoConvergence("Jacobi iteration did not converge in " +
                        std::to_string(kMaxJacobiSweeps) + " sweeps");
  }

  out.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.eigenvalues[k] = a(k, k);

  // Residual max |M v_k - lambda_k v_k| from the accumulated rotations.
  for (std::size_t k = 0; k < n; ++k) {
    const auto vk = w.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      const auto mi = m.row(i);
      double dot = 0.0;
      for (std::size_t j = 0; j < n; ++j) dot += mi[j] * vk[j];
      out.residual = std::max(out.residual, std::abs(dot - out.eigenvalues[k] * vk[i]));
    }
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

InterlacingReport interlacing_report(const ClassMatrices& m) {
  const std::int64_t p = m.prime.value();
  const auto np = static_cast<std::size_t>(p);
  InterlacingReport r;
  r.t_eigenvalues = symmetric_eigenvalues(m.T).eigenvalues;
  r.a_eigenvalues = symmetric_eigenvalues(m.A.cast<double>()).eigenvalues;
  const auto& t = r.t_eigenvalues;
  const auto& a = r.a_eigenvalues;

  r.lambda_min_t = t[0];
  r.lambda_min_a = a[0];
  r.second_largest_a = a[np - 2];
  r.second_largest_t = t[np];
  r.weil_bound = 2.0 * std::sqrt(static_cast<double>(p));

  const double eps = 1e-9 * static_cast<double>(p);
  auto le = [eps](double x, double y) { return x <= y + eps; };
  r.cauchy = true;
  for (std::size_t j = 0; j < np; ++j) {
    r.cauchy = r.cauchy && le(t[j], a[j]) && le(a[j], t[j + 2]);
  }
  r.lower_chain = le(-r.weil_bound, t[0]) && le(t[0], a[0]) && le(a[0], t[2]);
  r.upper_chain = le(t[np - 2], a[np - 2]) && le(a[np - 2], t[np]) && le(t[np], r.weil_bound);
  return r;
}

double norm_defect(const ClassMatrices& m) {
  RealMatrix e = m.T;
  for (std::size_t j = 0; j < m.A.rows(); ++j) {
    for (std::size_t k = 0; k < m.A.cols(); ++k) e(j, k) -= static_cast<double>(m.A(j, k));
  }
  const Spectrum s = symmetric_eigenvalues(e);
  return std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
}

MultigraphAdjacency::MultigraphAdjacency(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw InvalidArgument("adjacency must be square");
  for (std::size_t j = 0; j < n(); ++j) {
    for (std::size_t k = 0; k < n(); ++k) {
      if (entries_(j, k) < 0) throw InvalidArgument("adjacency entries must be nonnegative");
      if (entries_(j, k) != entries_(k, j)) throw InvalidArgument("adjacency must be symmetric");
    }
  }
}

std::int64_t MultigraphAdjacency::degree(std::size_t j) const {
  const auto row = entries_.row(j);
  return std::accumulate(row.begin(), row.end(), std::int64_t{0});
}

std::optional<std::int64_t> MultigraphAdjacency::regular_degree() const {
  if (n() == 0) return 0;
  const std::int64_t d = degree(0);
  for (std::size_t j = 1; j < n(); ++j) {
    if (degree(j) != d) return std::nullopt;
  }
  return d;
}

MultigraphAdjacency multigraph_candidate(const Prime& p, std::int64_t i, int variant) {
  if (variant == 1) return MultigraphAdjacency(build_a(p, i));
  if (variant != 2) throw InvalidArgument("variant must be 1 or 2");
  if (p.value() % 4 != 3) {
    throw BadVariantPrime("variant 2 needs p = 3 (mod 4), got p = " + std::to_string(p.value()));
  }
  IntMatrix b = build_b(p, i);
  b(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = 1;
  return MultigraphAdjacency(std::move(b));
}

MultigraphAdjacency ramanujan_multigraph(const Prime& p, std::int64_t i, int variant) {
  MultigraphAdjacency adj = multigraph_candidate(p, i, variant);
  if (!adj.regular_degree()) {
    std::int64_t lo = adj.degree(0), hi = lo;
    for (std::size_t j = 1; j < adj.n(); ++j) {
      lo = std::min(lo, adj.degree(j));
      hi = std::max(hi, adj.degree(j));
    }
    throw RegularityViolation("variant " + std::to_string(variant) + " multigraph for p = " +
                              std::to_string(p.value()) + ", i = " + std::to_string(i) +
                              " has degrees in [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
  }
  return adj;
}

RamanujanReport ramanujan_check(const MultigraphAdjacency& adj) {
  const auto d = adj.regular_degree();
  if (!d) throw NotRegular("adjacency rows have different sums");
  RamanujanReport r;
  r.d = *d;
  r.is_regular = true;
  r.eigenvalues = symmetric_eigenvalues(adj.entries().cast<double>()).eigenvalues;
  const double dd = static_cast<double>(r.d);
  const double tol = 1e-6 * std::max(dd, 1.0);
  for (const double lambda : r.eigenvalues) {
    if (std::abs(lambda - dd) < tol || std::abs(lambda + dd) < tol) {
      r.trivial_eigenvalues.push_back(lambda);
    } else {
      r.lambda = std::max(r.lambda, std::abs(lambda));
    }
  }
  r.bound = r.d >= 1 ? 2.0 * std::sqrt(dd - 1.0) : 0.0;
  r.is_ramanujan = r.lambda <= r.bound + 1e-9 * std::max(dd, 1.0);
  return r;
}

std::string export_graph(const MultigraphAdjacency& adj, GraphFormat format) {
  std::ostringstream os;
  const std::size_t n = adj.n();
  switch (format) {
    case GraphFormat::kDot:
      os << "graph G {\n";
      for (std::size_t j = 0; j < n; ++j) os << "  v" << j + 1 << ";\n";
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
          // One statement per parallel edge; loops are self-edges.
          for (long long e = 0; e < adj(j, k); ++e) {
            os << "  v" << j + 1 << " -- v" << k + 1 << ";\n";
          }
        }
      }
      os << "}\n";
      break;
    case GraphFormat::kJson: {
      nlohmann::json doc{{"n", n}, {"entries", adj.entries().data()}};
      os << doc.dump() << '\n';
      break;
    }
    case GraphFormat::kCsv:
      os << matrix_to_csv(adj.entries());
      break;
  }
  return os.str();
}

MultigraphAdjacency adjacency_from_json(const nlohmann::json& doc) {
  const auto n = doc.at("n").get<std::size_t>();
  const auto flat = doc.at("entries").get<std::vector<long long>>();
  if (flat.size() != n * n) throw InvalidArgument("entries must hold n * n integers");
  IntMatrix m(n, n);
  for (std::size_t idx = 0; idx < flat.size(); ++idx) m(idx / n, idx % n) = flat[idx];
  return MultigraphAdjacency(std::move(m));
}

MultigraphAdjacency petersen_graph() {
  IntMatrix m(10, 10);
  auto edge = [&m](std::size_t a, std::size_t b) { m(a, b) = m(b, a) = 1; };
  for (std::size_t k = 0; k < 5; ++k) {
    edge(k, (k + 1) % 5);          // outer cycle
    edge(5 + k, 5 + (k + 2) % 5);  // inner pentagram
    edge(k, 5 + k);                // spokes
  }
  return MultigraphAdjacency(std::move(m));
}

std::vector<Variant2Row> variant2_census(std::int64_t max_p, std::int64_t i) {
  std::vector<Variant2Row> rows;
  for (const Prime& p : primes_in_range(5, max_p)) {
    if (p.value() % 4 != 3) continue;
    Variant2Row row;
    row.p = p.value();
    const MultigraphAdjacency adj = multigraph_candidate(p, i, 2);
    row.regular = adj.regular_degree().has_value();
    if (row.regular) {
      const RamanujanReport r = ramanujan_check(adj);
      row.ramanujan = r.is_ramanujan;
      row.lambda = r.lambda;
      row.bound = r.bound;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace kloos
