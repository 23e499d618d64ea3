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

#include "coxpyr/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace coxpyr {

namespace {
const BigInt kZero{0};
}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.push_back(std::move(c));
  }
  return p;
}

IntPolynomial IntPolynomial::bracket(unsigned n) {
  if (n == 0) {
    throw std::invalid_argument("bracket: n must be positive");
  }
  IntPolynomial p;
  p.coeffs_.assign(n, BigInt(1));
  return p;
}

const BigInt& IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) {
    throw std::logic_error("leading coefficient of the zero polynomial");
  }
  return coeffs_.back();
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

BigRat IntPolynomial::operator()(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) {
    c = -c;
  }
  return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeff(i) + b.coeff(i);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeff(i) - b.coeff(i);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return IntPolynomial();
  }
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  IntPolynomial r = p;
  for (auto& x : r.coeffs_) {
    x *= c;
  }
  r.trim();
  return r;
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) {
      break;
    }
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) {
    return {};
  }
  BigInt g = content();
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) {
    c /= g;
  }
  return r;
}

IntPolynomial IntPolynomial::reversed(std::size_t width) const {
  if (!is_zero() && width < static_cast<std::size_t>(degree())) {
    throw std::invalid_argument("reversed: width below degree loses coefficients");
  }
  std::vector<BigInt> out(width + 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[width - i] = coeffs_[i];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) {
    throw std::invalid_argument("exact_divide: zero divisor");
  }
  if (is_zero()) {
    return {};
  }
  if (degree() < divisor.degree()) {
    throw std::invalid_argument("exact_divide: division is not exact");
  }
  // For an exact division over Z every quotient step is itself integral,
  // so plain long division with a divisibility check at each step suffices.
  std::vector<BigInt> rem = coeffs_;
  const auto db = static_cast<std::size_t>(divisor.degree());
  const BigInt& lead = divisor.leading();
  std::vector<BigInt> quot(rem.size() - db, BigInt(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigInt& top = rem[i + db];
    if (top == 0) {
      continue;
    }
    if (top % lead != 0) {
      throw std::invalid_argument("exact_divide: division is not exact");
    }
    BigInt q = top / lead;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i + j] -= q * divisor.coeffs_[j];
    }
    quot[i] = std::move(q);
  }
  for (const auto& c : rem) {
    if (c != 0) {
      throw std::invalid_argument("exact_divide: division is not exact");
    }
  }
  return IntPolynomial(std::move(quot));
}

namespace {

// One pseudo-division pass: repeatedly cancels the top coefficient of a
// against b after scaling by b's leading coefficient.  Only the remainder
// is needed; primitive-part reduction outside keeps growth in check.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const BigInt& lead = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
    std::vector<BigInt> scaled(a.coeffs().size(), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
      scaled[i] = a.coeffs()[i] * lead;
    }
    const BigInt top = a.leading();
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      scaled[shift + j] -= top * b.coeffs()[j];
    }
    a = IntPolynomial(std::move(scaled));
  }
  return a;
}

}  // namespace

IntPolynomial IntPolynomial::gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero() && b.is_zero()) {
    return {};
  }
  auto positive = [](IntPolynomial p) {
    return p.leading() < 0 ? -p : p;
  };
  if (a.is_zero()) {
    return positive(std::move(b));
  }
  if (b.is_zero()) {
    return positive(std::move(a));
  }
  BigInt c = boost::multiprecision::gcd(a.content(), b.content());
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) {
    std::swap(a, b);
  }
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(std::move(a), b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return positive(c * a);
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) {
      continue;
    }
    const bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) {
        out << "-";
      }
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (i == 0) {
      out << mag;
    } else {
      if (mag != 1) {
        out << mag << "*";
      }
      out << "t";
      if (i > 1) {
        out << "^" << i;
      }
    }
  }
  return out.str();
}

}  // namespace coxpyr
