// Copyright 2026 The tpants Authors.
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

#include "tpants/rational.hpp"

#include <numeric>
#include <ostream>

namespace tpants {

Rational::Rational(Int num, Int den) : num_(num), den_(den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = checked_neg(num_);
    den_ = checked_neg(den_);
  }
  const Int g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_neg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ = checked_add(num_, o.num_);
  } else {
    const Int g = std::gcd(den_, o.den_);
    const Int lhs = checked_mul(num_, o.den_ / g);
    const Int rhs = checked_mul(o.num_, den_ / g);
    num_ = checked_add(lhs, rhs);
    den_ = checked_mul(den_, o.den_ / g);
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // Cross-cancel first to keep intermediates small.
  const Int g1 = std::gcd(num_, o.den_);
  const Int g2 = std::gcd(o.num_, den_);
  const Int a = g1 ? num_ / g1 : num_;
  const Int d2 = g1 ? o.den_ / g1 : o.den_;
  const Int b = g2 ? o.num_ / g2 : o.num_;
  const Int d1 = g2 ? den_ / g2 : den_;
  num_ = checked_mul(a, b);
  den_ = checked_mul(d1, d2);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw ArithmeticError("rational division by zero");
  return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace tpants
