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

#include "martight/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace martight {

Dyadic::Dyadic(mpz_class numerator, std::uint64_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  canonicalize();
}

void Dyadic::canonicalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  const std::uint64_t zeros = mpz_scan1(numerator_.get_mpz_t(), 0);
  const std::uint64_t shift = std::min(zeros, exponent_);
  if (shift > 0) {
    mpz_fdiv_q_2exp(numerator_.get_mpz_t(), numerator_.get_mpz_t(), shift);
    exponent_ -= shift;
  }
}

Dyadic Dyadic::from_double(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("Dyadic::from_double: value is not finite");
  }
  if (value == 0.0) return Dyadic{};
  int exp = 0;
  const double mantissa = std::frexp(value, &exp);
  // mantissa * 2^53 is an integer of at most 53 bits.
  const auto scaled_mantissa = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  mpz_class num;
  mpz_set_si(num.get_mpz_t(), scaled_mantissa);
  return Dyadic(std::move(num), 0).scaled(static_cast<std::int64_t>(exp) - 53);
}

Dyadic Dyadic::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("Dyadic::parse: malformed dyadic text '" +
                                std::string(text) + "'");
  };
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  std::size_t digits_from = 0;
  if (!num_part.empty() && (num_part[0] == '-' || num_part[0] == '+')) digits_from = 1;
  if (num_part.size() <= digits_from) fail();
  for (std::size_t i = digits_from; i < num_part.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(num_part[i]))) fail();
  }
  mpz_class num;
  const std::string num_str(num_part[0] == '+' ? num_part.substr(1) : num_part);
  if (num.set_str(num_str, 10) != 0) fail();
  if (slash == std::string_view::npos) return Dyadic(std::move(num), 0);

  const std::string_view den = text.substr(slash + 1);
  if (den.size() < 3 || den.substr(0, 2) != "2^") fail();
  const std::string_view exp_part = den.substr(2);
  std::uint64_t exponent = 0;
  for (char ch : exp_part) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
    if (exponent > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) fail();
    exponent = exponent * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return Dyadic(std::move(num), exponent);
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  if (exponent_ >= rhs.exponent_) {
    mpz_class aligned;
    mpz_mul_2exp(aligned.get_mpz_t(), rhs.numerator_.get_mpz_t(), exponent_ - rhs.exponent_);
    numerator_ += aligned;
  } else {
    mpz_mul_2exp(numerator_.get_mpz_t(), numerator_.get_mpz_t(), rhs.exponent_ - exponent_);
    numerator_ += rhs.numerator_;
    exponent_ = rhs.exponent_;
  }
  canonicalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) { return *this += -rhs; }

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
  numerator_ *= rhs.numerator_;
  exponent_ += rhs.exponent_;
  canonicalize();
  return *this;
}

Dyadic Dyadic::operator-() const {
  Dyadic out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

Dyadic Dyadic::scaled(std::int64_t shift) const {
  if (is_zero()) return Dyadic{};
  Dyadic out = *this;
  if (shift < 0) {
    out.exponent_ += static_cast<std::uint64_t>(-shift);
    out.canonicalize();  // an even integer numerator can absorb the shift
    return out;
  }
  const auto up = static_cast<std::uint64_t>(shift);
  if (out.exponent_ >= up) {
    out.exponent_ -= up;
  } else {
    mpz_mul_2exp(out.numerator_.get_mpz_t(), out.numerator_.get_mpz_t(), up - out.exponent_);
    out.exponent_ = 0;
  }
  return out;
}

mpz_class Dyadic::floor() const {
  mpz_class out;
  mpz_fdiv_q_2exp(out.get_mpz_t(), numerator_.get_mpz_t(), exponent_);
  return out;
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  mpz_class magnitude = abs(numerator_);
  const auto bits = static_cast<std::int64_t>(mpz_sizeinbase(magnitude.get_mpz_t(), 2));
  if (exponent_ > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / 2)) {
    return sign() < 0 ? -0.0 : 0.0;
  }
  // value lies in [2^top, 2^(top+1))
  const std::int64_t top = bits - 1 - static_cast<std::int64_t>(exponent_);
  const double sign_factor = sign() < 0 ? -1.0 : 1.0;
  if (top > 1023) return sign_factor * std::numeric_limits<double>::infinity();
  if (top < -1076) return sign_factor * 0.0;

  // Significand bits available at this magnitude (fewer when subnormal).
  const std::int64_t precision = top >= -1022 ? 53 : top + 1075;
  if (precision < 0) return sign_factor * 0.0;
  if (bits <= precision) {
    return sign_factor * std::ldexp(magnitude.get_d(), static_cast<int>(-static_cast<std::int64_t>(exponent_)));
  }
  const std::int64_t drop = bits - precision;
  mpz_class kept;
  mpz_fdiv_q_2exp(kept.get_mpz_t(), magnitude.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
  mpz_class rest;
  mpz_fdiv_r_2exp(rest.get_mpz_t(), magnitude.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
  mpz_class half;
  mpz_setbit(half.get_mpz_t(), static_cast<mp_bitcnt_t>(drop - 1));
  const int cmp_half = cmp(rest, half);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(kept.get_mpz_t()))) ++kept;
  return sign_factor *
         std::ldexp(kept.get_d(), static_cast<int>(drop - static_cast<std::int64_t>(exponent_)));
}

std::string Dyadic::to_string() const {
  return numerator_.get_str(10) + "/2^" + std::to_string(exponent_);
}

std::string Dyadic::to_decimal() const {
  if (exponent_ == 0) return numerator_.get_str(10);
  mpz_class scaled = abs(numerator_);
  mpz_class five_pow;
  mpz_ui_pow_ui(five_pow.get_mpz_t(), 5, exponent_);
  scaled *= five_pow;
  std::string digits = scaled.get_str(10);
  if (digits.size() <= exponent_) digits.insert(0, exponent_ + 1 - digits.size(), '0');
  digits.insert(digits.size() - exponent_, 1, '.');
  if (sign() < 0) digits.insert(0, 1, '-');
  return digits;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int c = 0;
  if (a.exponent_ == b.exponent_) {
    c = cmp(a.numerator_, b.numerator_);
  } else if (a.exponent_ > b.exponent_) {
    mpz_class lifted;
    mpz_mul_2exp(lifted.get_mpz_t(), b.numerator_.get_mpz_t(), a.exponent_ - b.exponent_);
    c = cmp(a.numerator_, lifted);
  } else {
    mpz_class lifted;
    mpz_mul_2exp(lifted.get_mpz_t(), a.numerator_.get_mpz_t(), b.exponent_ - a.exponent_);
    c = cmp(lifted, b.numerator_);
  }
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& value) {
  return os << value.to_string();
}

}  // namespace martight
