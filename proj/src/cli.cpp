// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#include "kloos/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kloos/errors.hpp"
#include "kloos/group_oracle.hpp"
#include "kloos/identities.hpp"
#include "kloos/kloosterman.hpp"
#include "kloos/matrices.hpp"
#include "kloos/modular.hpp"
#include "kloos/spectra.hpp"

namespace kloos::cli {
namespace {

// Bad user input, reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::int64_t parse_integer(const std::string& text) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("'" + text + "' is not an integer");
  }
  if (used != text.size()) throw UsageError("'" + text + "' is not an integer");
  return value;
}

Prime parse_prime(const std::string& text) {
  try {
    return Prime(parse_integer(text));
  } catch (const InvalidPrime& e) {
    throw UsageError(e.what());
  }
}

/// "p" or "lo-hi"; a range selects every prime in it.
std::vector<Prime> parse_primes(const std::string& text) {
  const auto dash = text.find('-', 1);
  if (dash == std::string::npos) return {parse_prime(text)};
  const std::int64_t lo = parse_integer(text.substr(0, dash));
  const std::int64_t hi = parse_integer(text.substr(dash + 1));
  if (lo > hi) throw UsageError("empty range " + text);
  std::vector<Prime> primes = primes_in_range(lo, hi);
  if (primes.empty()) throw UsageError("range " + text + " holds no prime > 3");
  return primes;
}

std::int64_t checked_index(const Prime& p, std::int64_t i) {
  if (i < 1 || i > p.f()) {
    throw UsageError("index " + std::to_string(i) + " outside [1, " + std::to_string(p.f()) + "]");
  }
  return i;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open " + path + " for writing");
  file << text;
}

std::string fmt(double x, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

// ---------------------------------------------------------------- suites

Outcome suite_identities(const KloostermanTable& kt, const std::string& mode_name) {
  const bool exact = mode_name == "exact" || (mode_name == "auto" && kt.p() <= 199);
  const IdentityReport report = identity_suite(kt, exact ? IdentityMode::kExact : IdentityMode::kFloat);
  if (const IdentityResult* bad = report.first_failure()) {
    return {false, bad->id + ": expected " + std::to_string(bad->expected) + ", observed " +
                       (bad->exact ? bad->exact->to_string() : fmt(bad->observed, 17))};
  }
  const CharPolyCoefficients cp = charpoly_coefficients(kt);
  const Prime& p = kt.modulus;
  if (cp.c[2] != expected_c2(p) || cp.c[3] != expected_c3(p) || cp.c[4] != expected_c4(p)) {
    return {false, "charpoly: c2..c4 = " + std::to_string(cp.c[2]) + ", " + std::to_string(cp.c[3]) +
                       ", " + std::to_string(cp.c[4])};
  }
  return {true, std::to_string(report.results.size()) + " identities (" + to_string(report.mode) +
                    "), c2 c3 c4 = " + std::to_string(cp.c[2]) + " " + std::to_string(cp.c[3]) + " " +
                    std::to_string(cp.c[4])};
}

Outcome suite_magic(const KloostermanTable& kt) {
  for (std::int64_t i = 1; i <= kt.modulus.f(); ++i) {
    try {
      magic_report(build_class_matrices(kt, i));
    } catch (const MagicViolation& e) {
      return {false, e.what()};
    }
  }
  return {true, "all " + std::to_string(kt.modulus.f()) + " indices"};
}

Outcome suite_diag(const KloostermanTable& kt) {
  double worst_eigen = 0.0, worst_inv = 0.0;
  for (std::int64_t i = 1; i <= kt.modulus.f(); ++i) {
    const DiagonalizationResidual r = verify_truncated_diagonalization(build_class_matrices(kt, i), 1e-7);
    worst_eigen = std::max(worst_eigen, r.eigen_residual);
    worst_inv = std::max(worst_inv, r.involution_residual);
    if (!r.pass) {
      return {false, "T_iU = UD_i at i = " + std::to_string(i) + ": residual " + fmt(r.eigen_residual) +
                         ", |U^2 - I| " + fmt(r.involution_residual)};
    }
  }
  return {true, "max |TU - UD| " + fmt(worst_eigen, 3) + ", max |U^2 - I| " + fmt(worst_inv, 3)};
}

Outcome suite_lemma(const KloostermanTable& kt) {
  const Prime& p = kt.modulus;
  if (p.value() > kMaxLemmaPrime) {
    return {true, "skipped (full lemma needs p <= " + std::to_string(kMaxLemmaPrime) + ")"};
  }
  const Group group(p);
  const ConjugacyPartition partition = conjugacy_classes(group);
  for (std::int64_t i = 1; i <= p.f(); ++i) {
    for (std::int64_t j = 1; j <= p.f(); ++j) {
      for (std::int64_t k = 1; k <= p.f(); ++k) {
        const auto brute = class_coefficient_bruteforce(group, partition, static_cast<std::size_t>(i),
                                                        static_cast<std::size_t>(j), static_cast<std::size_t>(k));
        if (brute != class_coefficient(p, i, j, k)) {
          return {false, "class coefficient (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                             std::to_string(k) + "): group count " + std::to_string(brute)};
        }
      }
    }
  }
  const CharacterTable chars = build_character_table(kt);
  double worst = 0.0;
  for (std::size_t i = 1; i <= partition.count(); ++i) {
    const LemmaResiduals r = verify_lemma_full(group, partition, chars, i);
    worst = std::max({worst, r.similarity, r.unitary_similarity, r.unitarity});
  }
  if (worst >= 1e-8) return {false, "M_iW = WD_i residual " + fmt(worst)};
  return {true, "coefficients match brute force; lemma residual " + fmt(worst, 3)};
}

Outcome suite_bounds(const KloostermanTable& kt) {
  const BoundsReport b = bounds_report(kt);
  if (!b.kloosterman_ok) return {false, "max|K| " + fmt(b.max_abs) + " >= 2^(1/4) p^(3/4)"};
  if (!b.weil_ok) return {false, "max|K(u)| " + fmt(b.max_abs_nonzero) + " > 2 sqrt p"};
  if (!b.lower_ok) return {false, "max|K| " + fmt(b.max_abs) + " < sqrt 2 sqrt(p - 1)"};
  const double defect = norm_defect(build_class_matrices(kt, 1));
  const double target = std::sqrt(static_cast<double>(kt.p() - 1));
  if (std::abs(defect - target) > 1e-9) return {false, "norm defect " + fmt(defect, 17)};
  return {true, "margins " + fmt(b.kloosterman_margin(), 4) + " " + fmt(b.weil_margin(), 4) + " " +
                    fmt(b.lower_margin(), 4) + ", norm defect sqrt(p-1)"};
}

// ---------------------------------------------------------------- commands

int cmd_table(const Prime& p, const std::string& format, bool exact, const std::string& out_path,
              std::ostream& out) {
  const KloostermanTable kt = build_table(p);
  if (format == "json") {
    emit(table_to_json(kt, exact).dump(2) + "\n", out_path, out);
  } else {
    emit(table_to_csv(kt), out_path, out);
  }
  return kExitOk;
}

int cmd_matrices(const Prime& p, std::int64_t i, const std::string& format, const std::string& out_path,
                 std::ostream& out) {
  const KloostermanTable kt = build_table(p);
  const ClassMatrices m = build_class_matrices(kt, checked_index(p, i));
  const MagicReport report = magic_report(m);
  if (format == "json") {
    nlohmann::json doc = class_matrices_to_json(m);
    doc["magic"] = magic_report_to_json(report);
    emit(doc.dump(2) + "\n", out_path, out);
  } else if (format == "csv") {
    emit(matrix_to_csv(m.T), out_path, out);
  } else {
    std::ostringstream os;
    os << "B_" << i << " (p = " << p.value() << ")\n" << matrix_to_csv(m.B);
    os << "row sums " << (p.value() - 2) << " at j = " << i << ", " << (p.value() - 3) << " elsewhere\n";
    os << "trace " << report.trace << ", trace of square " << report.trace_of_square << "\n";
    os << "census zeros " << report.total.zeros << ", ones " << report.total.ones << ", twos "
       << report.total.twos << "\n";
    os << "diagonal 1 at j = " << report.diagonal_one_position << "\n";
    emit(os.str(), out_path, out);
  }
  return kExitOk;
}

int cmd_verify(const std::vector<Prime>& primes, const std::string& suite, const std::string& mode,
               const std::string& out_path, std::ostream& out) {
  static const std::vector<std::string> kSuites{"identities", "magic", "diag", "lemma", "bounds"};
  std::vector<std::string> selected;
  if (suite == "all") {
    selected = kSuites;
  } else {
    selected = {suite};
  }
  nlohmann::json doc = nlohmann::json::array();
  std::string first_failure;
  for (const Prime& p : primes) {
    const KloostermanTable kt = build_table(p);
    nlohmann::json row{{"p", p.value()}};
    for (const std::string& name : selected) {
      Outcome o;
      try {
        if (name == "identities") o = suite_identities(kt, mode);
        if (name == "magic") o = suite_magic(kt);
        if (name == "diag") o = suite_diag(kt);
        if (name == "lemma") o = suite_lemma(kt);
        if (name == "bounds") o = suite_bounds(kt);
      } catch (const Error& e) {
        o = {false, e.what()};
      }
      out << "p=" << p.value() << " " << name << " " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << "\n"
          << std::flush;
      row[name] = {{"pass", o.pass}, {"detail", o.detail}};
      if (!o.pass && first_failure.empty()) first_failure = "p=" + std::to_string(p.value()) + " " + name + ": " + o.detail;
    }
    doc.push_back(std::move(row));
  }
  if (!out_path.empty()) emit(doc.dump(2) + "\n", out_path, out);
  if (!first_failure.empty()) {
    out << "first failure: " << first_failure << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_graph(const Prime& p, std::int64_t i, int variant, const std::string& format, const std::string& out_path,
              std::ostream& out) {
  checked_index(p, i);
  MultigraphAdjacency adj;
  try {
    adj = ramanujan_multigraph(p, i, variant);
  } catch (const BadVariantPrime& e) {
    throw UsageError(e.what());
  }
  GraphFormat f = GraphFormat::kDot;
  if (format == "json") f = GraphFormat::kJson;
  if (format == "csv") f = GraphFormat::kCsv;
  emit(export_graph(adj, f), out_path, out);
  return kExitOk;
}

int cmd_ramanujan(const Prime& p, std::int64_t i, int variant, std::ostream& out) {
  checked_index(p, i);
  MultigraphAdjacency adj;
  try {
    adj = ramanujan_multigraph(p, i, variant);
  } catch (const BadVariantPrime& e) {
    throw UsageError(e.what());
  }
  const RamanujanReport r = ramanujan_check(adj);
  out << "d = " << r.d << ", lambda = " << fmt(r.lambda, 10) << ", bound 2 sqrt(d - 1) = " << fmt(r.bound, 10)
      << ", " << (r.is_ramanujan ? "Ramanujan" : "NOT Ramanujan") << "\n";
  return r.is_ramanujan ? kExitOk : kExitFailure;
}

int cmd_graph_census(std::int64_t max_p, std::ostream& out) {
  out << "p,p_mod_3,regular,ramanujan,lambda,bound\n";
  for (const Variant2Row& row : variant2_census(max_p)) {
    out << row.p << "," << row.p % 3 << "," << (row.regular ? "yes" : "no") << ",";
    if (row.regular) {
      out << (row.ramanujan ? "yes" : "no") << "," << fmt(row.lambda, 10) << "," << fmt(row.bound, 10) << "\n";
    } else {
      out << ",,\n";
    }
  }
  return kExitOk;
}

int cmd_spectrum(const Prime& p, std::int64_t i, std::ostream& out) {
  const KloostermanTable kt = build_table(p);
  const ClassMatrices m = build_class_matrices(kt, checked_index(p, i));
  const InterlacingReport r = interlacing_report(m);
  const std::int64_t q = p.value();
  out << std::setprecision(6);
  out << "p = " << q << ", i = " << i << "\n";
  out << "lambda_0(T)     = " << r.lambda_min_t << "\n";
  out << "lambda_0(A)     = " << r.lambda_min_a << "\n";
  out << "lambda_" << q - 2 << "(A)    = " << r.second_largest_a << "\n";
  out << "lambda_" << q + 1 << "(T)    = " << r.second_largest_t << "  (second largest; largest is f = " << q - 1
      << ")\n";
  out << "2 sqrt p        = " << r.weil_bound << "\n";
  out << "interlacing     " << (r.cauchy ? "holds" : "FAILS") << "\n";
  out << "lower chain     " << (r.lower_chain ? "holds" : "FAILS") << "\n";
  out << "upper chain     " << (r.upper_chain ? "holds" : "FAILS") << "\n";
  return r.pass() ? kExitOk : kExitFailure;
}

int cmd_oracle(const Prime& p, const std::string& out_path, std::ostream& out) {
  if (p.value() > kMaxOraclePrime) {
    throw UsageError("oracle needs p <= " + std::to_string(kMaxOraclePrime));
  }
  const Group group(p);
  const ConjugacyPartition partition = conjugacy_classes(group);
  out << "|G| = " << group.order() << ", " << partition.count() << " classes, generator g = "
      << partition.generator.value() << "\n";
  std::int64_t mismatches = 0;
  for (std::int64_t i = 1; i <= p.f(); ++i) {
    for (std::int64_t j = 1; j <= p.f(); ++j) {
      for (std::int64_t k = 1; k <= p.f(); ++k) {
        const auto brute = class_coefficient_bruteforce(group, partition, static_cast<std::size_t>(i),
                                                        static_cast<std::size_t>(j), static_cast<std::size_t>(k));
        if (brute != class_coefficient(p, i, j, k)) ++mismatches;
      }
    }
  }
  out << "closed-form c_{i,j,k} vs group counts: " << mismatches << " mismatches over " << p.f() * p.f() * p.f()
      << " triples\n";
  bool ok = mismatches == 0;
  if (p.value() <= kMaxLemmaPrime) {
    const CharacterTable chars = build_character_table(build_table(p));
    double worst = 0.0;
    for (std::size_t i = 1; i <= partition.count(); ++i) {
      const LemmaResiduals r = verify_lemma_full(group, partition, chars, i);
      worst = std::max({worst, r.similarity, r.unitary_similarity, r.unitarity});
    }
    out << "full lemma M_iW = WD_i, all i: max residual " << fmt(worst, 3) << "\n";
    ok = ok && worst < 1e-8;
  } else {
    out << "full lemma skipped (p > " << kMaxLemmaPrime << ")\n";
  }
  if (!out_path.empty()) emit(census_to_json(partition).dump(2) + "\n", out_path, out);
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kloosterman sum verification lab", "kloos"};
  app.require_subcommand(1);

  std::string prime_text, out_path, format, suite = "all", mode = "auto";
  std::int64_t index = 1, max_p = 499;
  int variant = 1;
  bool exact = false;
  std::function<int()> action;

  auto add_prime = [&](CLI::App* sub) { sub->add_option("p", prime_text, "odd prime > 3")->required(); };
  auto add_index = [&](CLI::App* sub) { sub->add_option("-i,--index", index, "Type-1 class index in [1, p-1]"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", out_path, "write output here"); };

  auto* table = app.add_subcommand("table", "Kloosterman sums K(u), u = 0..p-1");
  add_prime(table);
  table->add_option("-f,--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--exact", exact, "include Z[zeta] coefficients (json)");
  add_out(table);
  table->callback([&] { action = [&] { return cmd_table(parse_prime(prime_text), format, exact, out_path, out); }; });

  auto* matrices = app.add_subcommand("matrices", "build B_i, A_i, T_i and check the magic properties");
  add_prime(matrices);
  add_index(matrices);
  matrices->add_option("-f,--format", format, "text, csv (T_i) or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  add_out(matrices);
  matrices->callback(
      [&] { action = [&] { return cmd_matrices(parse_prime(prime_text), index, format, out_path, out); }; });

  auto* verify = app.add_subcommand("verify", "run verification suites on p or on every prime in lo-hi");
  verify->add_option("p", prime_text, "prime or range lo-hi")->required();
  verify->add_option("-s,--suite", suite, "identities, magic, diag, lemma, bounds or all")
      ->check(CLI::IsMember({"identities", "magic", "diag", "lemma", "bounds", "all"}));
  verify->add_option("-m,--mode", mode, "identity arithmetic: exact, float or auto (exact when p <= 199)")
      ->check(CLI::IsMember({"exact", "float", "auto"}));
  add_out(verify);
  verify->callback([&] { action = [&] { return cmd_verify(parse_primes(prime_text), suite, mode, out_path, out); }; });

  auto* graph = app.add_subcommand("graph", "export the multigraph attached to T_i");
  add_prime(graph);
  add_index(graph);
  graph->add_option("-v,--variant", variant, "1 (A_i) or 2 (B_i, p = 3 mod 4)")->check(CLI::IsMember({1, 2}));
  graph->add_option("-f,--format", format, "dot, json or csv")->check(CLI::IsMember({"dot", "json", "csv"}));
  add_out(graph);
  graph->callback(
      [&] { action = [&] { return cmd_graph(parse_prime(prime_text), index, variant, format, out_path, out); }; });

  auto* ramanujan = app.add_subcommand("ramanujan", "test the multigraph against 2 sqrt(d - 1)");
  add_prime(ramanujan);
  add_index(ramanujan);
  ramanujan->add_option("-v,--variant", variant, "1 or 2")->check(CLI::IsMember({1, 2}));
  ramanujan->callback([&] { action = [&] { return cmd_ramanujan(parse_prime(prime_text), index, variant, out); }; });

  auto* census = app.add_subcommand("graph-census", "regularity of the variant-2 multigraphs, p = 3 mod 4");
  census->add_option("--max-p", max_p, "largest prime");
  census->callback([&] { action = [&] { return cmd_graph_census(max_p, out); }; });

  auto* spectrum = app.add_subcommand("spectrum", "extreme eigenvalues of T_i and A_i");
  add_prime(spectrum);
  add_index(spectrum);
  spectrum->callback([&] { action = [&] { return cmd_spectrum(parse_prime(prime_text), index, out); }; });

  auto* oracle = app.add_subcommand("oracle", "brute-force group cross-check (p <= 31; full lemma p <= 13)");
  add_prime(oracle);
  add_out(oracle);
  oracle->callback([&] { action = [&] { return cmd_oracle(parse_prime(prime_text), out_path, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace kloos::cli
