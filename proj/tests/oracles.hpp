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

// Independent reference implementations used only by the tests.  Each one
// computes a quantity the library also computes, but along a different
// route, so shared bugs are unlikely:
//
//   * word_growth_counts     breadth-first search in the reflection
//                            representation, counting elements by length
//   * gram_positive_definite Cholesky on the cosine matrix (finite type
//                            iff positive definite)
//   * lobachevsky_fourier    the sine series (1/2) sum sin(2n theta)/n^2
//   * naive_mul              schoolbook polynomial product

#ifndef COXPYR_TESTS_ORACLES_HPP
#define COXPYR_TESTS_ORACLES_HPP

#include "coxpyr/diagram.hpp"
#include "coxpyr/polynomial.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace coxpyr_oracles {

inline double bilinear_entry(int order) {
  if (order == coxpyr::kInfiniteOrder) return -1.0;
  return -std::cos(M_PI / order);
}

/// Number of group elements of each word length 0..depth, found by plain
/// breadth-first search in the reflection representation.  Elements are
/// matrices; two are identified when every entry agrees to 1e-7.  Valid
/// for the small depths used in tests, where distinct elements differ by
/// far more than the float noise.
inline std::vector<long long> word_growth_counts(const coxpyr::CoxeterDiagram& d,
                                                 int depth) {
  const std::size_t n = d.rank();
  using Matrix = std::vector<double>;  // row-major n x n
  std::vector<double> bilinear(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      bilinear[i * n + j] = bilinear_entry(d.order(i, j));

  // generator i maps column vector x to x - 2 B(x, e_i) e_i, i.e. it
  // subtracts 2 * (row i of B applied to x) from coordinate i
  auto apply_generator = [&](std::size_t g, const Matrix& m) {
    Matrix out = m;
    for (std::size_t col = 0; col < n; ++col) {
      double dot = 0;
      for (std::size_t r = 0; r < n; ++r) dot += bilinear[g * n + r] * m[r * n + col];
      out[g * n + col] -= 2 * dot;
    }
    return out;
  };

  auto key_of = [&](const Matrix& m) {
    std::vector<std::int64_t> key(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) key[i] = std::llround(m[i] * 1e7);
    return key;
  };

  Matrix identity(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) identity[i * n + i] = 1.0;

  std::map<std::vector<std::int64_t>, int> seen;
  seen[key_of(identity)] = 0;
  std::vector<Matrix> frontier = {identity};
  std::vector<long long> counts = {1};
  for (int level = 1; level <= depth; ++level) {
    std::vector<Matrix> next;
    for (const Matrix& m : frontier) {
      for (std::size_t g = 0; g < n; ++g) {
        Matrix image = apply_generator(g, m);
        auto [it, inserted] = seen.emplace(key_of(image), level);
        if (inserted) next.push_back(std::move(image));
      }
    }
    counts.push_back(static_cast<long long>(next.size()));
    frontier = std::move(next);
  }
  return counts;
}

/// Finite type test via the Gram matrix: the cosine matrix of a Coxeter
/// diagram is positive definite exactly when the group is finite.  The
/// pivot threshold separates the affine (determinant zero) cases from
/// rounding noise; fine for the small labels used in tests.
inline bool gram_positive_definite(const coxpyr::CoxeterDiagram& d) {
  const std::size_t n = d.rank();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i * n + j] = (i == j) ? 1.0 : bilinear_entry(d.order(i, j));
  for (std::size_t k = 0; k < n; ++k) {
    double pivot = a[k * n + k];
    if (pivot < 1e-9) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = a[i * n + k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return true;
}

/// Lobachevsky function by its Fourier series.  The tail after N terms is
/// bounded by 1/(N^2 |sin theta|) via summation by parts, so N = 2e5 gives
/// comfortably better than 1e-6 away from multiples of pi.
inline double lobachevsky_fourier(double theta, int terms = 200000) {
  double sum = 0;
  for (int k = terms; k >= 1; --k) sum += std::sin(2.0 * k * theta) / (static_cast<double>(k) * k);
  return 0.5 * sum;
}

inline coxpyr::IntPolynomial naive_mul(const coxpyr::IntPolynomial& a,
                                       const coxpyr::IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<coxpyr::BigInt> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return coxpyr::IntPolynomial(std::move(out));
}

}  // namespace coxpyr_oracles

#endif  // COXPYR_TESTS_ORACLES_HPP
