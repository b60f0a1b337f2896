// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#include "kloos/group_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "kloos/errors.hpp"

namespace kloos {

Matrix4 to_matrix4(const GroupElement& e, const Prime& p) {
  Matrix4 m{};
  m[0] = {e.x, e.y, 0, 0};
  m[1] = {0, 1, 0, 0};
  m[2] = {0, 0, inverse_mod(e.x, p), e.z};
  m[3] = {0, 0, 0, 1};
  return m;
}

Matrix4 multiply_mod(const Matrix4& a, const Matrix4& b, const Prime& p) {
  Matrix4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      out[i][j] = p.reduce(s);
    }
  }
  return out;
}

Group::Group(Prime p) : p_(p) {
  const std::int64_t n = p.value();
  if (n > kMaxOraclePrime) {
    throw PrimeTooLarge("group enumeration is limited to p <= " +
                        std::to_string(kMaxOraclePrime) + ", got " + std::to_string(n));
  }
  inverse_.assign(static_cast<std::size_t>(n), 0);
  for (std::int64_t x = 1; x < n; ++x) inverse_[static_cast<std::size_t>(x)] = inverse_mod(x, p);
  elements_.reserve(static_cast<std::size_t>((n - 1) * n * n));
  for (std::int64_t x = 1; x < n; ++x) {
    for (std::int64_t y = 0; y < n; ++y) {
      for (std::int64_t z = 0; z < n; ++z) elements_.push_back({x, y, z});
    }
  }
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const {
  // [[x1,y1],[0,1]][[x2,y2],[0,1]] = [[x1 x2, x1 y2 + y1],[0,1]], likewise
  // with x^-1 in the second block.
  return {p_.reduce(a.x * b.x), p_.reduce(a.x * b.y + a.y),
          p_.reduce(inverse_[static_cast<std::size_t>(a.x)] * b.z + a.z)};
}

GroupElement Group::inverse(const GroupElement& a) const {
  const std::int64_t xi = inverse_[static_cast<std::size_t>(a.x)];
  return {xi, p_.reduce(-xi * a.y), p_.reduce(-a.x * a.z)};
}

std::size_t Group::index_of(const GroupElement& e) const noexcept {
  const auto n = static_cast<std::size_t>(p_.value());
  return (static_cast<std::size_t>(e.x - 1) * n + static_cast<std::size_t>(e.y)) * n +
         static_cast<std::size_t>(e.z);
}

std::vector<GroupElement> enumerate_group(const Prime& p) {
  const Group group(p);
  return {group.elements().begin(), group.elements().end()};
}

const char* to_string(ClassType t) noexcept {
  switch (t) {
    case ClassType::kType1: return "Type1";
    case ClassType::kType2a: return "Type2a";
    case ClassType::kType2b: return "Type2b";
    case ClassType::kType3: return "Type3";
    case ClassType::kType4: return "Type4";
  }
  return "?";
}

namespace {

struct ClassLabel {
  std::size_t index;  // 1-based C_k
  ClassType type;
};

// Label of the class containing e, read off conjugation invariants: the
// x-eigenvalue g^m for Type 4, and y z for Type 1.
ClassLabel label_of(const GroupElement& e, const Prime& p,
                    const std::vector<std::int64_t>& discrete_log) {
  const auto n = static_cast<std::size_t>(p.value());
  if (e.x != 1) return {n + 2 + static_cast<std::size_t>(discrete_log[static_cast<std::size_t>(e.x)]), ClassType::kType4};
  if (e.y == 0 && e.z == 0) return {n + 2, ClassType::kType3};
  if (e.z == 0) return {n, ClassType::kType2a};
  if (e.y == 0) return {n + 1, ClassType::kType2b};
  return {static_cast<std::size_t>(p.reduce(e.y * e.z)), ClassType::kType1};
}

GroupElement canonical_representative(std::size_t k, const Prime& p, std::int64_t g) {
  const auto n = static_cast<std::size_t>(p.value());
  if (k < n) return {1, static_cast<std::int64_t>(k), 1};
  if (k == n) return {1, 1, 0};
  if (k == n + 1) return {1, 0, 1};
  if (k == n + 2) return {1, 0, 0};
  return {pow_mod(g, static_cast<std::int64_t>(k - n - 2), p.value()), 0, 0};
}

}  // namespace

ConjugacyPartition conjugacy_classes(const Group& group) {
  const Prime& p = group.prime();
  const std::int64_t n = p.value();
  const Residue g = primitive_root(p);

  std::vector<std::int64_t> discrete_log(static_cast<std::size_t>(n), -1);
  for (std::int64_t m = 0, power = 1; m < n - 1; ++m, power = p.reduce(power * g.value())) {
    discrete_log[static_cast<std::size_t>(power)] = m;
  }

  const std::array<GroupElement, 3> generators{
      GroupElement{g.value(), 0, 0}, GroupElement{1, 1, 0}, GroupElement{1, 0, 1}};
  std::array<GroupElement, 3> generator_inverses{};
  for (std::size_t s = 0; s < 3; ++s) generator_inverses[s] = group.inverse(generators[s]);

  const std::size_t total = group.order();
  const std::size_t class_count = static_cast<std::size_t>(2 * n);
  ConjugacyPartition out{p, g, std::vector<std::vector<std::size_t>>(class_count),
                         std::vector<GroupElement>(class_count),
                         std::vector<ClassType>(class_count), std::vector<std::size_t>(total, total)};

  std::vector<std::size_t> orbit;
  std::size_t found = 0;
  for (std::size_t start = 0; start < total; ++start) {
    if (out.class_of[start] != total) continue;
    // Breadth-first closure under e -> s e s^-1.
    orbit.assign(1, start);
    out.class_of[start] = class_count;  // visited marker
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const GroupElement e = group.elements()[orbit[head]];
      for (std::size_t s = 0; s < 3; ++s) {
        const GroupElement c =
            group.multiply(group.multiply(generators[s], e), generator_inverses[s]);
        const std::size_t idx = group.index_of(c);
        if (out.class_of[idx] == total) {
          out.class_of[idx] = class_count;
          orbit.push_back(idx);
        }
      }
    }
    ++found;
    if (found > class_count) {
      throw CensusMismatch("more than 2p conjugacy classes for p = " + std::to_string(n));
    }

    const ClassLabel label = label_of(group.elements()[start], p, discrete_log);
    auto& members = out.classes[label.index - 1];
    if (!members.empty()) {
      throw CensusMismatch("two orbits share the label C_" + std::to_string(label.index));
    }
    for (const std::size_t idx : orbit) {
      const ClassLabel other = label_of(group.elements()[idx], p, discrete_log);
      if (other.index != label.index) {
        throw CensusMismatch("class invariant not constant on C_" + std::to_string(label.index));
      }
      out.class_of[idx] = label.index - 1;
    }
    members = orbit;
    std::sort(members.begin(), members.end());
    out.type[label.index - 1] = label.type;
  }

  if (found != class_count) {
    throw CensusMismatch("expected " + std::to_string(class_count) + " classes, found " +
                         std::to_string(found));
  }
  const auto f = static_cast<std::size_t>(n - 1);
  for (std::size_t k = 1; k <= class_count; ++k) {
    const auto nn = static_cast<std::size_t>(n);
    const std::size_t expected = k <= nn + 1 ? f : (k == nn + 2 ? 1 : nn * nn);
    if (out.size(k) != expected) {
      throw CensusMismatch("|C_" + std::to_string(k) + "| = " + std::to_string(out.size(k)) +
                           ", expected " + std::to_string(expected));
    }
    const GroupElement rep = canonical_representative(k, p, g.value());
    if (out.class_of[group.index_of(rep)] != k - 1) {
      throw CensusMismatch("canonical representative missing from C_" + std::to_string(k));
    }
    out.representative[k - 1] = rep;
  }
  return out;
}

nlohmann::json census_to_json(const ConjugacyPartition& partition) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t k = 1; k <= partition.count(); ++k) {
    const GroupElement& r = partition.representative[k - 1];
    classes.push_back({{"index", k},
                       {"type", to_string(partition.type[k - 1])},
                       {"size", partition.size(k)},
                       {"representative", {r.x, r.y, r.z}}});
  }
  std::size_t order = 0;
  for (const auto& c : partition.classes) order += c.size();
  return {{"p", partition.prime.value()},
          {"primitive_root", partition.generator.value()},
          {"group_order", order},
          {"class_count", partition.count()},
          {"classes", std::move(classes)}};
}

std::int64_t class_coefficient_bruteforce(const Group& group, const ConjugacyPartition& partition,
                                          std::size_t i, std::size_t j, const GroupElement& z) {
  if (i < 1 || i > partition.count() || j < 1 || j > partition.count()) {
    throw InvalidArgument("class index out of range");
  }
  // Each X in C_i determines Y = X^-1 z; count those landing in C_j.
  std::int64_t count = 0;
  for (const std::size_t xi : partition.classes[i - 1]) {
    const GroupElement y = group.multiply(group.inverse(group.elements()[xi]), z);
    if (partition.class_of[group.index_of(y)] == j - 1) ++count;
  }
  return count;
}

std::int64_t class_coefficient_bruteforce(const Group& group, const ConjugacyPartition& partition,
                                          std::size_t i, std::size_t j, std::size_t k) {
  if (k < 1 || k > partition.count()) throw InvalidArgument("class index out of range");
  return class_coefficient_bruteforce(group, partition, i, j, partition.representative[k - 1]);
}

IntMatrix class_matrix_bruteforce(const Group& group, const ConjugacyPartition& partition,
                                  std::size_t i) {
  if (i < 1 || i > partition.count()) throw InvalidArgument("class index out of range");
  const std::size_t s = partition.count();
  IntMatrix m(s, s);
  for (std::size_t k = 0; k < s; ++k) {
    const GroupElement& z = partition.representative[k];
    for (const std::size_t xi : partition.classes[i - 1]) {
      const GroupElement y = group.multiply(group.inverse(group.elements()[xi]), z);
      ++m(partition.class_of[group.index_of(y)], k);
    }
  }
  return m;
}

std::complex<double> CharacterTable::inner_product(std::size_t a, std::size_t b) const {
  std::complex<double> sum = 0.0;
  std::int64_t order = 0;
  for (std::size_t k = 0; k < count(); ++k) {
    sum += static_cast<double>(class_sizes[k]) * entries(a - 1, k) * std::conj(entries(b - 1, k));
    order += class_sizes[k];
  }
  return sum / static_cast<double>(order);
}

CharacterTable build_character_table(const KloostermanTable& table) {
  const Prime& prime = table.modulus;
  const std::int64_t p = prime.value();
  const std::int64_t f = prime.f();
  const auto n = static_cast<std::size_t>(p);
  const std::size_t s = 2 * n;

  CharacterTable out{prime, ComplexMatrix(s, s),
                     std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(f)), {}, {}};
  auto set = [&](std::size_t r, std::size_t k, std::complex<double> v) { out.entries(r - 1, k - 1) = v; };

  for (std::size_t r = 1; r <= n - 1; ++r) {
    for (std::size_t k = 1; k <= n - 1; ++k) set(r, k, table[static_cast<std::int64_t>(r * k)]);
    set(r, n, -1.0);
    set(r, n + 1, -1.0);
    set(r, n + 2, static_cast<double>(f));
  }
  for (std::size_t k = 1; k <= n - 1; ++k) {
    set(n, k, -1.0);
    set(n + 1, k, -1.0);
  }
  set(n, n, static_cast<double>(f));
  set(n, n + 1, -1.0);
  set(n + 1, n, -1.0);
  set(n + 1, n + 1, static_cast<double>(f));
  set(n, n + 2, static_cast<double>(f));
  set(n + 1, n + 2, static_cast<double>(f));
  for (std::size_t k = 1; k <= s; ++k) set(n + 2, k, 1.0);
  for (std::size_t r = 1; r <= n - 2; ++r) {
    for (std::size_t k = 1; k <= n + 2; ++k) set(n + 2 + r, k, 1.0);
    for (std::size_t m = 1; m <= n - 2; ++m) {
      // xi^(r m), reduced mod f to keep the angle small.
      const auto e = static_cast<double>((r * m) % static_cast<std::size_t>(f));
      set(n + 2 + r, n + 2 + m, std::polar(1.0, 2.0 * std::numbers::pi * e / static_cast<double>(f)));
    }
  }

  out.class_sizes.assign(s, f);
  out.class_sizes[n + 1] = 1;
  for (std::size_t k = n + 2; k < s; ++k) out.class_sizes[k] = p * p;
  out.dimensions.resize(s);
  for (std::size_t r = 1; r <= s; ++r) {
    out.dimensions[r - 1] = static_cast<std::int64_t>(std::llround(out.value(r, n + 2).real()));
  }

  for (std::size_t a = 1; a <= s; ++a) {
    for (std::size_t b = a; b <= s; ++b) {
      const std::complex<double> ip = out.inner_product(a, b);
      const double expected = a == b ? 1.0 : 0.0;
      if (std::abs(ip - expected) > 1e-6) {
        throw OrthogonalityFailure("<chi_" + std::to_string(a) + ", chi_" + std::to_string(b) +
                                   "> deviates from " + std::to_string(expected));
      }
    }
  }
  return out;
}

std::string character_table_to_csv(const CharacterTable& table) {
  std::ostringstream os;
  os.precision(17);
  os << "character";
  for (std::size_t k = 1; k <= table.count(); ++k) os << ",C_" << k;
  os << '\n';
  for (std::size_t r = 1; r <= table.count(); ++r) {
    os << "chi_" << r;
    for (std::size_t k = 1; k <= table.count(); ++k) {
      const std::complex<double> v = table.value(r, k);
      // Text form a+bi, with a signed imaginary part.
      const double im = v.imag() == 0.0 ? 0.0 : v.imag();
      os << ',' << v.real() << (std::signbit(im) ? '-' : '+') << std::abs(im) << 'i';
    }
    os << '\n';
  }
  return os.str();
}

LemmaResiduals verify_lemma_full(const Group& group, const ConjugacyPartition& partition,
                                 const CharacterTable& characters, std::size_t i) {
  const std::int64_t p = group.prime().value();
  if (p > kMaxLemmaPrime) {
    throw PrimeTooLarge("full lemma verification is limited to p <= " +
                        std::to_string(kMaxLemmaPrime));
  }
  const std::size_t s = partition.count();
  if (i < 1 || i > s) throw InvalidArgument("class index out of range");

  const ComplexMatrix m = class_matrix_bruteforce(group, partition, i).cast<std::complex<double>>();
  const double root_order = std::sqrt(static_cast<double>(group.order()));

  // w_{j,k} = |C_j| chi_k(C_j) / dim pi_k and u_{j,k} = sqrt|C_j| chi_k(C_j) / sqrt|G|.
  ComplexMatrix w(s, s), u(s, s), q(s, s), q_inv(s, s);
  for (std::size_t j = 0; j < s; ++j) {
    const auto size = static_cast<double>(partition.classes[j].size());
    q(j, j) = std::sqrt(size);
    q_inv(j, j) = 1.0 / std::sqrt(size);
    for (std::size_t k = 0; k < s; ++k) {
      const std::complex<double> chi = characters.entries(k, j);
      w(j, k) = size * chi / static_cast<double>(characters.dimensions[k]);
      u(j, k) = std::sqrt(size) * chi / root_order;
    }
  }
  std::vector<std::complex<double>> d(s);
  for (std::size_t k = 0; k < s; ++k) d[k] = w(i - 1, k);

  LemmaResiduals out;
  out.similarity = max_abs_diff(multiply(m, w), scale_columns<std::complex<double>>(w, d));
  const ComplexMatrix t = multiply(multiply(q_inv, m), q);
  out.unitary_similarity = max_abs_diff(multiply(t, u), scale_columns<std::complex<double>>(u, d));
  out.unitarity = max_abs_diff(multiply(adjoint(u), u), ComplexMatrix::identity(s));
  return out;
}

}  // namespace kloos
