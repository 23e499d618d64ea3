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

#ifndef COXPYR_RATIONAL_FUNCTION_HPP
#define COXPYR_RATIONAL_FUNCTION_HPP

#include "coxpyr/polynomial.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace coxpyr {

/// Quotient of two IntPolynomials kept in canonical form: numerator and
/// denominator coprime, denominator with positive leading coefficient,
/// joint integer content 1.  Equal values therefore compare equal
/// componentwise.
class RationalFunction {
 public:
  /// The zero function 0/1.
  RationalFunction();

  /// Canonicalizes num/den.  Throws std::invalid_argument if den is zero.
  static RationalFunction make(IntPolynomial num, IntPolynomial den);

  static RationalFunction from_polynomial(IntPolynomial p);
  static RationalFunction one();

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

  bool operator==(const RationalFunction&) const = default;

  std::string to_string() const;

 private:
  RationalFunction(IntPolynomial num, IntPolynomial den);

  IntPolynomial num_;
  IntPolynomial den_;
};

/// Signed sum of rational functions: sum of sign * value over terms.
/// The signs are restricted to +1/-1.  Throws std::invalid_argument on an
/// empty list or any other sign value.
RationalFunction rf_combine(const std::vector<std::pair<int, RationalFunction>>& terms);

/// P(t)/Q(t) -> rev(Q)/rev(P) where rev reverses coefficients at the common
/// width max(deg P, deg Q), i.e. the map induced by t -> 1/t.  Throws
/// std::invalid_argument when the input is zero.
RationalFunction reciprocal_transform(const RationalFunction& rf);

/// First `count` Taylor coefficients of rf at t = 0.  Throws
/// std::invalid_argument if den(0) == 0 or some coefficient is not an
/// integer.
std::vector<BigInt> series_coefficients(const RationalFunction& rf, std::size_t count);

}  // namespace coxpyr

#endif  // COXPYR_RATIONAL_FUNCTION_HPP
