// Copyright 2026 The ratcp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RATCP_RATIONAL_HPP_
#define RATCP_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ratcp {

// Arbitrary-precision integer.
using Integer = mpz_class;

// Exact rational number. Always kept in lowest terms with a positive
// denominator; every operation returns a canonical value.
class Rational {
 public:
  Rational() = default;
  template <std::signed_integral T>
  Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT
  template <std::unsigned_integral T>
  Rational(T value) : q_(static_cast<unsigned long>(value)) {}  // NOLINT
  Rational(const Integer& value) : q_(value) {}                 // NOLINT
  // Throws std::domain_error if `den` is zero.
  Rational(const Integer& num, const Integer& den);

  // Parses "p", "-p" or "p/q" (decimal, q > 0). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }

  Rational abs() const;
  // Largest integer <= value.
  Integer floor() const;
  // Nearest integer, ties rounded up: floor(value + 1/2).
  Integer round_nearest() const;
  Rational reciprocal() const;

  // Canonical text: "p/q" always, e.g. "3/1", "-1/2".
  std::string to_string() const;
  // Shortest text: "p" for integers, otherwise "p/q".
  std::string to_short_string() const;
  double to_double() const { return q_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Dense rational vector.
using Vector = std::vector<Rational>;

// Plain dot product. Throws std::invalid_argument on length mismatch.
Rational dot(const Vector& a, const Vector& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace ratcp

#endif  // RATCP_RATIONAL_HPP_
