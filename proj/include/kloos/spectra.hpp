// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KLOOS_SPECTRA_HPP
#define KLOOS_SPECTRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kloos/dense.hpp"
#include "kloos/matrices.hpp"
#include "kloos/modular.hpp"

#include <json.hpp>

namespace kloos {

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double residual = 0.0;            // max |M v - lambda v| over computed pairs
  int sweeps = 0;
};

inline constexpr int kMaxJacobiSweeps = 100;

/// Cyclic Jacobi. Stops once the off-diagonal Frobenius norm drops below
/// tol * ||M||_F; throws NoConvergence after kMaxJacobiSweeps sweeps and
/// InvalidArgument if M is not symmetric to within 1e-12 ||M||.
Spectrum symmetric_eigenvalues(const RealMatrix& m, double tol = 1e-12);

/// Eigenvalues of T_i and of its p x p principal submatrix A_i, plus the
/// interlacing and Weil-chain checks.
struct InterlacingReport {
  std::vector<double> t_eigenvalues;
  std::vector<double> a_eigenvalues;
  double lambda_min_t = 0.0;       // lambda_0(T)
  double lambda_min_a = 0.0;       // lambda_0(A)
  double second_largest_a = 0.0;   // lambda_{p-2}(A)
  double second_largest_t = 0.0;   // lambda_p(T); the largest is f
  double weil_bound = 0.0;         // 2 sqrt(p)
  bool cauchy = false;             // lambda_j(T) <= lambda_j(A) <= lambda_{j+2}(T), all j
  bool lower_chain = false;        // -2 sqrt p <= lambda_0(T) <= lambda_0(A) <= lambda_2(T)
  bool upper_chain = false;        // lambda_{p-2}(T) <= lambda_{p-2}(A) <= lambda_p(T) <= 2 sqrt p
  bool pass() const noexcept { return cauchy && lower_chain && upper_chain; }
};

InterlacingReport interlacing_report(const ClassMatrices& m);

/// || T_i - (A_i (+) 0_2) ||, the spectral norm of the border.
double norm_defect(const ClassMatrices& m);

/// Symmetric nonnegative integer adjacency; a_{jj} counts loops at v_j and
/// contributes once to the degree.
class MultigraphAdjacency {
 public:
  MultigraphAdjacency() = default;
  /// Throws InvalidArgument for non-square, asymmetric or negative input.
  explicit MultigraphAdjacency(IntMatrix entries);

  std::size_t n() const noexcept { return entries_.rows(); }
  const IntMatrix& entries() const noexcept { return entries_; }
  long long operator()(std::size_t j, std::size_t k) const { return entries_(j, k); }

  std::int64_t degree(std::size_t j) const;
  /// The common degree, if every vertex has the same one. An empty graph is 0-regular.
  std::optional<std::int64_t> regular_degree() const;

  friend bool operator==(const MultigraphAdjacency&, const MultigraphAdjacency&) = default;

 private:
  IntMatrix entries_;
};

/// Variant 1: A_i on p vertices. Variant 2 (p = 3 mod 4): B_i with
/// a_{i,i} forced to 1, on p - 1 vertices. Throws BadVariantPrime or
/// RegularityViolation.
MultigraphAdjacency ramanujan_multigraph(const Prime& p, std::int64_t i, int variant);

/// The adjacency ramanujan_multigraph would return, without validation.
MultigraphAdjacency multigraph_candidate(const Prime& p, std::int64_t i, int variant);

struct RamanujanReport {
  std::int64_t d = 0;
  std::vector<double> eigenvalues;          // ascending
  std::vector<double> trivial_eigenvalues;  // those within 1e-6 d of +-d
  double lambda = 0.0;                      // max |nontrivial eigenvalue|
  double bound = 0.0;                       // 2 sqrt(d - 1)
  bool is_regular = false;
  bool is_ramanujan = false;
};

/// Throws NotRegular if the row sums differ.
RamanujanReport ramanujan_check(const MultigraphAdjacency& adj);

enum class GraphFormat { kDot, kJson, kCsv };

std::string export_graph(const MultigraphAdjacency& adj, GraphFormat format);
/// Inverse of the JSON export, {"n": n, "entries": [row-major integers]}.
MultigraphAdjacency adjacency_from_json(const nlohmann::json& doc);

/// The 3-regular Petersen graph, outer 5-cycle 0..4, inner pentagram 5..9.
MultigraphAdjacency petersen_graph();

/// Regularity and Ramanujan verdict of the variant-2 construction for one p = 3 (mod 4).
struct Variant2Row {
  std::int64_t p = 0;
  bool regular = false;
  bool ramanujan = false;  // meaningful only when regular
  double lambda = 0.0;
  double bound = 0.0;
};

std::vector<Variant2Row> variant2_census(std::int64_t max_p, std::int64_t i = 1);

}  // namespace kloos

#endif  // KLOOS_SPECTRA_HPP
