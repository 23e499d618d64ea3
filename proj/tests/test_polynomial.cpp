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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxpyr/polynomial.hpp"
#include "coxpyr/rational_function.hpp"
#include "oracles.hpp"

#include <random>
#include <vector>

using coxpyr::BigInt;
using coxpyr::BigRat;
using coxpyr::IntPolynomial;
using coxpyr::RationalFunction;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_degree, int max_abs) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial conventions") {
  IntPolynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.coeff(0) == 0);
  CHECK(zero.coeff(17) == 0);
  CHECK(zero.to_string() == "0");
  CHECK_THROWS_AS(zero.leading(), std::logic_error);

  // trailing zeros are stripped, including down to the empty vector
  CHECK(IntPolynomial({0, 0, 0}) == zero);
  CHECK(IntPolynomial({1, 2, 0, 0}).degree() == 1);
}

TEST_CASE("bracket polynomials") {
  CHECK(IntPolynomial::bracket(1) == IntPolynomial{1});
  CHECK(IntPolynomial::bracket(2) == IntPolynomial{1, 1});
  CHECK(IntPolynomial::bracket(5) == IntPolynomial{1, 1, 1, 1, 1});
  CHECK(IntPolynomial::bracket(5)(BigInt(1)) == 5);
  CHECK_THROWS_AS(IntPolynomial::bracket(0), std::invalid_argument);
}

TEST_CASE("arithmetic agrees with the schoolbook product") {
  std::mt19937 rng(20260815);
  for (int iter = 0; iter < 200; ++iter) {
    IntPolynomial a = random_poly(rng, 7, 9);
    IntPolynomial b = random_poly(rng, 7, 9);
    IntPolynomial c = random_poly(rng, 7, 9);
    CHECK(a * b == coxpyr_oracles::naive_mul(a, b));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == IntPolynomial{});
    CHECK(-(a - b) == b - a);
    CHECK(BigInt(3) * a == IntPolynomial{3} * a);
  }
}

TEST_CASE("evaluation matches a direct power sum") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> arg(-5, 5);
  for (int iter = 0; iter < 50; ++iter) {
    IntPolynomial p = random_poly(rng, 6, 20);
    BigInt x = arg(rng);
    BigInt direct = 0, power = 1;
    for (const BigInt& c : p.coeffs()) {
      direct += c * power;
      power *= x;
    }
    CHECK(p(x) == direct);
    CHECK(p(BigRat(x)) == BigRat(direct));
  }
  IntPolynomial p{-1, 0, 2};  // 2t^2 - 1
  CHECK(p(BigRat(1, 2)) == BigRat(-1, 2));
}

TEST_CASE("content and primitive part") {
  CHECK(IntPolynomial({6, 12}).content() == 6);
  CHECK(IntPolynomial({-6, -12}).content() == 6);
  CHECK(IntPolynomial({-6, -12}).primitive_part() == IntPolynomial({-1, -2}));
  CHECK(IntPolynomial{}.content() == 0);
  CHECK(IntPolynomial{}.primitive_part().is_zero());
}

TEST_CASE("reversal is an involution at fixed width") {
  CHECK(IntPolynomial({1, 2}).reversed(1) == IntPolynomial({2, 1}));
  CHECK(IntPolynomial({0, 1}).reversed(1) == IntPolynomial{1});
  CHECK(IntPolynomial({1, 2, 3}).reversed(4) == IntPolynomial({0, 0, 3, 2, 1}));
  CHECK_THROWS_AS(IntPolynomial({1, 2, 3}).reversed(1), std::invalid_argument);

  std::mt19937 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    IntPolynomial p = random_poly(rng, 6, 9);
    std::size_t width = static_cast<std::size_t>(p.degree() < 0 ? 0 : p.degree()) + iter % 3;
    CHECK(p.reversed(width).reversed(width) == p);
  }
}

TEST_CASE("exact division") {
  IntPolynomial a{-1, 0, 1};       // t^2 - 1
  IntPolynomial b{1, 1};           // t + 1
  CHECK(a.exact_divide(b) == IntPolynomial({-1, 1}));
  CHECK_THROWS_AS(IntPolynomial({1, 0, 1}).exact_divide(b), std::invalid_argument);
  CHECK_THROWS_AS(a.exact_divide(IntPolynomial{}), std::invalid_argument);

  std::mt19937 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    IntPolynomial p = random_poly(rng, 5, 9);
    IntPolynomial q = random_poly(rng, 5, 9);
    if (q.is_zero()) continue;
    CHECK((p * q).exact_divide(q) == p);
  }
}

TEST_CASE("gcd over the integers") {
  CHECK(IntPolynomial::gcd({}, {}).is_zero());
  CHECK(IntPolynomial::gcd({-2, -4}, {}) == IntPolynomial({2, 4}));
  CHECK(IntPolynomial::gcd({-1, 0, 1}, {1, 1}) == IntPolynomial({1, 1}));
  CHECK(IntPolynomial::gcd({4}, {6}) == IntPolynomial{2});

  // gcd(a c, b c) == gcd(a, b) * c up to the sign normalization
  std::mt19937 rng(17);
  for (int iter = 0; iter < 60; ++iter) {
    IntPolynomial a = random_poly(rng, 4, 6);
    IntPolynomial b = random_poly(rng, 4, 6);
    IntPolynomial c = random_poly(rng, 3, 6);
    if (c.is_zero()) continue;
    IntPolynomial left = IntPolynomial::gcd(a * c, b * c);
    IntPolynomial right = IntPolynomial::gcd(a, b) * c;
    if (!right.is_zero() && right.leading() < 0) right = -right;
    CHECK(left == right);
    if (!left.is_zero()) {
      CHECK(left.leading() > 0);
      CHECK_NOTHROW((a * c).exact_divide(left));
      CHECK_NOTHROW((b * c).exact_divide(left));
    }
  }
}

TEST_CASE("string form") {
  CHECK(IntPolynomial({-1, 2, 1}).to_string() == "-1 + 2*t + t^2");
  CHECK(IntPolynomial({0, 1}).to_string() == "t");
  CHECK(IntPolynomial({0, 0, -1}).to_string() == "-t^2");
  CHECK(IntPolynomial({1, -1, -1, -1, 0, 1, 1}).to_string() ==
        "1 - t - t^2 - t^3 + t^5 + t^6");
}

TEST_CASE("rational function canonical form") {
  auto half = RationalFunction::make(IntPolynomial{2, 2}, IntPolynomial{2});
  CHECK(half == RationalFunction::make(IntPolynomial{1, 1}, IntPolynomial{1}));
  CHECK(half.is_polynomial());

  // common factor cancels
  CHECK(RationalFunction::make({-1, 0, 1}, {-1, 1}) ==
        RationalFunction::from_polynomial({1, 1}));

  // denominator sign is normalized, so both spellings compare equal
  CHECK(RationalFunction::make({1, 1}, {1, -1}) ==
        RationalFunction::make({-1, -1}, {-1, 1}));

  CHECK_THROWS_AS(RationalFunction::make({1}, {}), std::invalid_argument);
  CHECK(RationalFunction().is_zero());
  CHECK(RationalFunction::one() == RationalFunction::from_polynomial({1}));
}

TEST_CASE("rational arithmetic telescopes") {
  auto inv = [](IntPolynomial p) { return RationalFunction::make({1}, std::move(p)); };
  RationalFunction a = inv({1, 1});
  CHECK(a + RationalFunction::make({0, 1}, {1, 1}) == RationalFunction::one());
  CHECK(RationalFunction::one() - a == RationalFunction::make({0, 1}, {1, 1}));
  CHECK(a * RationalFunction::from_polynomial({1, 1}) == RationalFunction::one());

  std::mt19937 rng(19);
  for (int iter = 0; iter < 40; ++iter) {
    IntPolynomial p = random_poly(rng, 4, 5);
    IntPolynomial q = random_poly(rng, 4, 5);
    if (q.is_zero()) q = IntPolynomial{1, 2};
    RationalFunction r = RationalFunction::make(p, q);
    CHECK(r - r == RationalFunction());
    CHECK(r + RationalFunction() == r);
    CHECK(r * RationalFunction::one() == r);
  }
}

TEST_CASE("signed combination cross-checked by hand") {
  auto inv = [](IntPolynomial p) { return RationalFunction::make({1}, std::move(p)); };

  // 1/(1+t) + 1/(1+t+t^2); cross multiplication gives
  // ((1+t+t^2) + (1+t)) / ((1+t)(1+t+t^2)) = (2+2t+t^2) / (1+2t+2t^2+t^3)
  auto sum = coxpyr::rf_combine({{+1, inv({1, 1})}, {+1, inv({1, 1, 1})}});
  CHECK(sum == RationalFunction::make({2, 2, 1}, {1, 2, 2, 1}));

  // order of the terms must not matter
  auto sum2 = coxpyr::rf_combine({{+1, inv({1, 1, 1})}, {+1, inv({1, 1})}});
  CHECK(sum == sum2);

  auto diff = coxpyr::rf_combine({{+1, RationalFunction::one()}, {-1, inv({1, 1})}});
  CHECK(diff == RationalFunction::make({0, 1}, {1, 1}));

  CHECK_THROWS_AS(coxpyr::rf_combine({}), std::invalid_argument);
  CHECK_THROWS_AS(coxpyr::rf_combine({{2, RationalFunction::one()}}),
                  std::invalid_argument);
}

TEST_CASE("reciprocal transform") {
  using coxpyr::reciprocal_transform;
  // f(t) = t/(1+t): 1/f(1/t) = (1+1/t)/(1/t)... = t(1+1/t) = t+1
  CHECK(reciprocal_transform(RationalFunction::make({0, 1}, {1, 1})) ==
        RationalFunction::from_polynomial({1, 1}));
  // and back again
  CHECK(reciprocal_transform(RationalFunction::from_polynomial({1, 1})) ==
        RationalFunction::make({0, 1}, {1, 1}));
  // constants invert
  CHECK(reciprocal_transform(RationalFunction::from_polynomial({2})) ==
        RationalFunction::make({1}, {2}));
  CHECK_THROWS_AS(reciprocal_transform(RationalFunction()), std::invalid_argument);

  std::mt19937 rng(23);
  int done = 0;
  while (done < 40) {
    IntPolynomial p = random_poly(rng, 4, 5);
    IntPolynomial q = random_poly(rng, 4, 5);
    if (p.is_zero() || q.is_zero()) continue;
    RationalFunction r = RationalFunction::make(p, q);
    if (r.is_zero()) continue;
    CHECK(reciprocal_transform(reciprocal_transform(r)) == r);
    ++done;
  }
}

TEST_CASE("power series extraction") {
  using coxpyr::series_coefficients;
  auto geo = series_coefficients(RationalFunction::make({1}, {1, -1}), 5);
  CHECK(geo == std::vector<BigInt>{1, 1, 1, 1, 1});

  auto sq = series_coefficients(RationalFunction::make({1}, {1, -2, 1}), 5);
  CHECK(sq == std::vector<BigInt>{1, 2, 3, 4, 5});

  auto poly = series_coefficients(RationalFunction::from_polynomial({1, 1}), 4);
  CHECK(poly == std::vector<BigInt>{1, 1, 0, 0});

  CHECK(series_coefficients(RationalFunction::one(), 0).empty());

  // pole at the origin and non-integer expansions are rejected
  CHECK_THROWS_AS(series_coefficients(RationalFunction::make({1}, {0, 1}), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_coefficients(RationalFunction::make({1}, {2, -1}), 3),
                  std::invalid_argument);

  // convolving the prefix against the denominator recovers the numerator
  std::mt19937 rng(29);
  int done = 0;
  while (done < 30) {
    IntPolynomial p = random_poly(rng, 4, 5);
    IntPolynomial q = random_poly(rng, 4, 5);
    if (q.is_zero() || q.coeff(0) == 0) continue;
    std::vector<BigInt> qc = q.coeffs();
    qc[0] = (qc[0] > 0) ? 1 : -1;  // unit constant keeps the series integral
    q = IntPolynomial(qc);
    RationalFunction r = RationalFunction::make(p, q);
    const std::size_t depth = 12;
    auto series = series_coefficients(r, depth);
    for (std::size_t k = 0; k < depth; ++k) {
      BigInt conv = 0;
      for (std::size_t j = 0; j <= k && j < r.den().coeffs().size(); ++j)
        conv += r.den().coeff(j) * series[k - j];
      CHECK(conv == r.num().coeff(k));
    }
    ++done;
  }
}
