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

#ifndef COXPYR_GROWTH_HPP
#define COXPYR_GROWTH_HPP

#include "coxpyr/diagram.hpp"
#include "coxpyr/finite_type.hpp"
#include "coxpyr/rational_function.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace coxpyr {

/// Word-length growth function of the (infinite) system d as a rational
/// function P(t)/Q(t): the alternating sum of reciprocal growth polynomials
/// over the finite parabolic family, composed with t -> 1/t.
RationalFunction steinberg_growth(const CoxeterDiagram& d);

/// Factor Q = (t - 1) * g exactly over Z.  Throws std::invalid_argument if
/// t = 1 is not a root.  When Q(0) = 1 the cofactor satisfies g(0) = -1.
IntPolynomial denominator_split(const IntPolynomial& q);

/// Witness that the smallest positive root of g is the reciprocal of a
/// Perron number: (t + 1)^power * g(t) + 1 has non-negative coefficients
/// h_coeffs with zero constant term and support gcd 1.
struct PerronCertificate {
  int power;
  std::vector<BigInt> h_coeffs;
  long long support_gcd;
};

/// Smallest power in 0..max_power admitting a certificate, if any.
std::optional<PerronCertificate> perron_certificate(const IntPolynomial& g, int max_power = 5);

/// Exact dyadic bracket [lo, hi] around the smallest positive root of g,
/// of width at most eps, found by bisecting the certificate's monotone
/// companion h on (0, 1).  tau estimates 1/root with |error| <= tau_error.
struct GrowthRate {
  BigRat lo, hi;
  double tau;
  double tau_error;
};

GrowthRate growth_rate(const IntPolynomial& g, const PerronCertificate& cert,
                       const BigRat& eps = BigRat(1, BigInt(1) << 40));

/// All complex roots by Durand-Kerner iteration.  Throws std::runtime_error
/// if the iteration does not converge to residuals below 1e-10.
std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p);

/// Independent floating-point confirmation: g has exactly one root within
/// 1e-8 of r1 and every other root has modulus at least r1 + 1e-8.
bool numeric_root_check(const IntPolynomial& g, double r1);

struct GrowthOptions {
  int root_eps_bits = 40;
  int perron_max_power = 5;
};

/// Full growth pipeline for one pyramid.
struct PyramidGrowth {
  PyramidQuadruple quadruple;
  RationalFunction growth;   // P/Q with P(0) = Q(0) = 1
  IntPolynomial g;           // Q = (t - 1) g
  PerronCertificate perron;
  GrowthRate rate;
};

PyramidGrowth compute_growth(const PyramidQuadruple& q, const GrowthOptions& opts = {});

}  // namespace coxpyr

#endif  // COXPYR_GROWTH_HPP
