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

#ifndef COXPYR_POLYNOMIAL_HPP
#define COXPYR_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace coxpyr {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Univariate polynomial over the integers, stored as a dense ascending
/// coefficient vector with no trailing zero coefficients.  The zero
/// polynomial is the empty vector and reports degree() == -1.
///
/// All arithmetic is exact; nothing here ever rounds.
class IntPolynomial {
 public:
  /// The zero polynomial.
  IntPolynomial() = default;

  /// From ascending coefficients; trailing zeros are stripped.
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<BigInt> coeffs);

  static IntPolynomial constant(BigInt c);

  /// 1 + t + ... + t^(n-1).  Throws std::invalid_argument if n == 0.
  static IntPolynomial bracket(unsigned n);

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, with the convention deg 0 = -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of t^i; zero beyond the degree.
  const BigInt& coeff(std::size_t i) const;

  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Leading coefficient.  Throws std::logic_error on the zero polynomial.
  const BigInt& leading() const;

  BigInt operator()(const BigInt& x) const;
  BigRat operator()(const BigRat& x) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);

  bool operator==(const IntPolynomial&) const = default;

  /// gcd of the coefficients, non-negative; 0 for the zero polynomial.
  BigInt content() const;

  /// p / content(p) for nonzero p, zero otherwise.
  IntPolynomial primitive_part() const;

  /// t^width * p(1/t).  Requires width >= degree (information preserving).
  IntPolynomial reversed(std::size_t width) const;

  /// Quotient of an exact division.  Throws std::invalid_argument if the
  /// divisor is zero or does not divide *this over the integers.
  IntPolynomial exact_divide(const IntPolynomial& divisor) const;

  /// Polynomial gcd over Z, including integer content, normalized to a
  /// positive leading coefficient.  Computed with a primitive-remainder
  /// sequence, so intermediate coefficients stay primitive and exact.
  static IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

  /// Human form in ascending order, e.g. "1 - t - t^2 + t^5".
  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

}  // namespace coxpyr

#endif  // COXPYR_POLYNOMIAL_HPP
