// Copyright 2026 The martight Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MARTIGHT_DYADIC_HPP_
#define MARTIGHT_DYADIC_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace martight {

/**
 * Exact rational number with a power-of-two denominator,
 * value = numerator / 2^exponent.
 *
 * Every value is kept canonical: the exponent is as small as possible, so
 * either the numerator is odd or the exponent is zero (integers, and zero). Canonical form makes structural equality
 * coincide with numeric equality, and makes the text form "p/2^k" unique.
 *
 * All arithmetic is exact. Division is only offered by powers of two.
 */
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value) : numerator_(value) {}  // NOLINT: implicit by design of literals
  Dyadic(mpz_class numerator, std::uint64_t exponent);

  // Exact conversion; every finite double is a dyadic rational.
  static Dyadic from_double(double value);

  // Parses the "p/2^k" text form. Non-canonical input is accepted and
  // canonicalized. Throws std::invalid_argument on malformed text.
  static Dyadic parse(std::string_view text);

  const mpz_class& numerator() const { return numerator_; }
  std::uint64_t exponent() const { return exponent_; }

  bool is_zero() const { return numerator_ == 0; }
  int sign() const { return sgn(numerator_); }

  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  Dyadic& operator*=(const Dyadic& rhs);

  friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }
  friend Dyadic operator-(Dyadic lhs, const Dyadic& rhs) { return lhs -= rhs; }
  friend Dyadic operator*(Dyadic lhs, const Dyadic& rhs) { return lhs *= rhs; }
  Dyadic operator-() const;

  // Multiplies by 2^shift (negative shift divides).
  Dyadic scaled(std::int64_t shift) const;
  Dyadic half() const { return scaled(-1); }
  Dyadic twice() const { return scaled(1); }

  // Mathematical floor, rounding toward negative infinity.
  mpz_class floor() const;
  bool is_integer() const { return exponent_ == 0; }

  // Correctly rounded to nearest, ties to even, including the subnormal range.
  double to_double() const;

  // "p/2^k" with canonical p and k.
  std::string to_string() const;
  // Exact decimal expansion (terminates after exactly `exponent()` digits).
  std::string to_decimal() const;

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.numerator_ == b.numerator_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void canonicalize();

  mpz_class numerator_{0};
  std::uint64_t exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& value);

}  // namespace martight

#endif  // MARTIGHT_DYADIC_HPP_
