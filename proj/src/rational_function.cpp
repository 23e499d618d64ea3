/*
   Copyright 2026 The coxpyr authors

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

#include "coxpyr/rational_function.hpp"

#include <stdexcept>

namespace coxpyr {

RationalFunction::RationalFunction() : den_(IntPolynomial::constant(1)) {}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {}

RationalFunction RationalFunction::make(IntPolynomial num, IntPolynomial den) {
  if (den.is_zero()) {
    throw std::invalid_argument("RationalFunction: zero denominator");
  }
  if (num.is_zero()) {
    return {IntPolynomial(), IntPolynomial::constant(1)};
  }
  IntPolynomial g = IntPolynomial::gcd(num, den);
  num = num.exact_divide(g);
  den = den.exact_divide(g);
  if (den.leading() < 0) {
    num = -num;
    den = -den;
  }
  // gcd includes integer content, so the pair is already jointly primitive.
  return {std::move(num), std::move(den)};
}

RationalFunction RationalFunction::from_polynomial(IntPolynomial p) {
  return make(std::move(p), IntPolynomial::constant(1));
}

RationalFunction RationalFunction::one() {
  return from_polynomial(IntPolynomial::constant(1));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::make(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) {
    return num_.to_string();
  }
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFunction rf_combine(const std::vector<std::pair<int, RationalFunction>>& terms) {
  if (terms.empty()) {
    throw std::invalid_argument("rf_combine: empty term list");
  }
  RationalFunction acc;
  for (const auto& [sign, value] : terms) {
    if (sign == 1) {
      acc = acc + value;
    } else if (sign == -1) {
      acc = acc - value;
    } else {
      throw std::invalid_argument("rf_combine: sign must be +1 or -1");
    }
  }
  return acc;
}

RationalFunction reciprocal_transform(const RationalFunction& rf) {
  if (rf.is_zero()) {
    throw std::invalid_argument("reciprocal_transform: zero input");
  }
  const auto width = static_cast<std::size_t>(std::max(rf.num().degree(), rf.den().degree()));
  return RationalFunction::make(rf.den().reversed(width), rf.num().reversed(width));
}

std::vector<BigInt> series_coefficients(const RationalFunction& rf, std::size_t count) {
  const BigInt& d0 = rf.den().coeff(0);
  if (d0 == 0) {
    throw std::invalid_argument("series_coefficients: pole at t = 0");
  }
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    BigInt acc = rf.num().coeff(k);
    for (std::size_t j = 1; j <= k; ++j) {
      acc -= rf.den().coeff(j) * out[k - j];
    }
    if (acc % d0 != 0) {
      throw std::invalid_argument("series_coefficients: non-integer coefficient");
    }
    out.push_back(acc / d0);
  }
  return out;
}

}  // namespace coxpyr
