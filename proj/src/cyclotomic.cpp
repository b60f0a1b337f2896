// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#include "kloos/cyclotomic.hpp"

#include <cassert>
#include <numbers>
#include <sstream>

#include "kloos/errors.hpp"
#include "kloos/summation.hpp"

namespace kloos {

CyclotomicInt CyclotomicInt::constant(Prime p, std::int64_t c) {
  CyclotomicInt out(p);
  out.coeffs_[0] = c;
  return out;
}

CyclotomicInt CyclotomicInt::zeta_power(Prime p, std::int64_t k) {
  std::vector<std::int64_t> cyclic(static_cast<std::size_t>(p.value()), 0);
  cyclic[static_cast<std::size_t>(p.reduce(k))] = 1;
  return from_cyclic(p, cyclic);
}

CyclotomicInt CyclotomicInt::from_cyclic(Prime p, std::span<const std::int64_t> cyclic) {
  if (cyclic.size() != static_cast<std::size_t>(p.value())) {
    throw InvalidArgument("cyclic vector must have length p");
  }
  CyclotomicInt out(p);
  const std::int64_t top = cyclic.back();
  for (std::size_t k = 0; k + 1 < cyclic.size(); ++k) out.coeffs_[k] = cyclic[k] - top;
  return out;
}

std::vector<std::int64_t> CyclotomicInt::to_cyclic() const {
  std::vector<std::int64_t> out(coeffs_.begin(), coeffs_.end());
  out.push_back(0);
  return out;
}

CyclotomicInt CyclotomicInt::galois(std::int64_t a) const {
  const std::int64_t p = p_.value();
  if (p_.reduce(a) == 0) throw InvalidArgument("galois exponent must be a unit");
  std::vector<std::int64_t> cyclic(static_cast<std::size_t>(p), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    cyclic[static_cast<std::size_t>(p_.reduce(static_cast<std::int64_t>(k) * a))] += coeffs_[k];
  }
  return from_cyclic(p_, cyclic);
}

bool CyclotomicInt::is_integer() const noexcept {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

std::optional<std::int64_t> CyclotomicInt::as_integer() const noexcept {
  if (!is_integer()) return std::nullopt;
  return coeffs_[0];
}

template <class Float>
Float CyclotomicInt::real_embedding_as() const {
  const Float p = static_cast<Float>(p_.value());
  CompensatedSum<Float> sum;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const Float angle = 2 * std::numbers::pi_v<Float> * static_cast<Float>(k) / p;
    sum += static_cast<Float>(coeffs_[k]) * std::cos(angle);
  }
  return sum.value();
}

template double CyclotomicInt::real_embedding_as<double>() const;
template long double CyclotomicInt::real_embedding_as<long double>() const;

std::complex<double> CyclotomicInt::embedding() const {
  const double p = static_cast<double>(p_.value());
  CompensatedSum<double> re, im;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle = 2 * std::numbers::pi * static_cast<double>(k) / p;
    re += static_cast<double>(coeffs_[k]) * std::cos(angle);
    im += static_cast<double>(coeffs_[k]) * std::sin(angle);
  }
  return {re.value(), im.value()};
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  if (!(p_ == other.p_)) throw InvalidArgument("mixed moduli");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& other) {
  if (!(p_ == other.p_)) throw InvalidArgument("mixed moduli");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(std::int64_t scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (!(a.p_ == b.p_)) throw InvalidArgument("mixed moduli");
  std::vector<std::int64_t> acc(static_cast<std::size_t>(a.p_.value()), 0);
  add_cyclic_product(acc, a.to_cyclic(), b.to_cyclic());
  return CyclotomicInt::from_cyclic(a.p_, acc);
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = c < 0 ? -c : c;
    if (k == 0) {
      os << c;
    } else {
      if (c != 1) os << c << ' ';
      os << "z^" << k;
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

void add_cyclic_product(std::span<std::int64_t> acc, std::span<const std::int64_t> a,
                        std::span<const std::int64_t> b) {
  const std::size_t p = acc.size();
  assert(a.size() == p && b.size() == p);
  for (std::size_t i = 0; i < p; ++i) {
    const std::int64_t ai = a[i];
    if (ai == 0) continue;
    // Exponents i + j < p land at i + j, the rest wrap to i + j - p.
    const std::size_t split = p - i;
    std::int64_t* hi = acc.data() + i;
    for (std::size_t j = 0; j < split; ++j) hi[j] += ai * b[j];
    const std::int64_t* b_tail = b.data() + split;
    for (std::size_t j = 0; j < i; ++j) acc[j] += ai * b_tail[j];
  }
}

void CyclicAccumulator::add(std::span<const std::int64_t> cyclic, std::int64_t scale) {
  assert(cyclic.size() == acc_.size());
  for (std::size_t k = 0; k < acc_.size(); ++k) acc_[k] += scale * cyclic[k];
}

}  // namespace kloos
