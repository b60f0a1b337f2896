// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KLOOS_SUMMATION_HPP
#define KLOOS_SUMMATION_HPP

#include <cmath>

namespace kloos {

/// Neumaier's variant of Kahan summation.
template <class T>
class CompensatedSum {
 public:
  void add(T x) noexcept {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(T x) noexcept {
    add(x);
    return *this;
  }
  T value() const noexcept { return sum_ + compensation_; }

 private:
  T sum_{};
  T compensation_{};
};

}  // namespace kloos

#endif  // KLOOS_SUMMATION_HPP
