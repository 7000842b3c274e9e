/*
Copyright 2026 the hoct authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hoct {

/// Exact rational over int64. All conductances, norms and transition
/// probabilities of the small-instance oracle are computed with this type so
/// that identities can be asserted with zero tolerance. Throws on overflow
/// instead of silently degrading.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    i128 n = num, d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    reduce_and_set(n, d);
  }
  // NOLINTNEXTLINE(google-explicit-constructor): integers embed naturally.
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

 private:
  using i128 = __int128;

  static Rational from_i128(i128 n, i128 d) {
    Rational r;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    r.reduce_and_set(n, d);
    return r;
  }

  void reduce_and_set(i128 n, i128 d) {
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    if (a != 0) {
      n /= a;
      d /= a;
    } else {
      d = 1;  // n == 0
    }
    constexpr i128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim)
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational rational_min(const Rational& a, const Rational& b) {
  return a < b ? a : b;
}

/// Compares a/b vs c/d without constructing Rationals (hot enumeration
/// loops). All inputs must have positive denominators.
inline int compare_ratio(std::int64_t a, std::int64_t b, std::int64_t c,
                         std::int64_t d) {
  __int128 lhs = static_cast<__int128>(a) * d;
  __int128 rhs = static_cast<__int128>(c) * b;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace hoct
