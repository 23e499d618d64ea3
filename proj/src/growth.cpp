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

#include "coxpyr/growth.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coxpyr {

RationalFunction steinberg_growth(const CoxeterDiagram& d) {
  std::vector<std::pair<int, RationalFunction>> terms;
  for (const auto& subset : finite_parabolic_family(d)) {
    const int sign = std::popcount(subset.mask) % 2 == 0 ? 1 : -1;
    terms.emplace_back(sign, RationalFunction::make(IntPolynomial::constant(1),
                                                    solomon_growth(subset.decomposition)));
  }
  // The alternating sum equals 1 / f(1/t); undoing t -> 1/t recovers f.
  RationalFunction sum = rf_combine(terms);
  if (sum.is_zero()) {
    throw std::runtime_error("steinberg_growth: alternating sum vanished (system is finite?)");
  }
  return reciprocal_transform(sum);
}

IntPolynomial denominator_split(const IntPolynomial& q) {
  return q.exact_divide(IntPolynomial{-1, 1});
}

std::optional<PerronCertificate> perron_certificate(const IntPolynomial& g, int max_power) {
  if (g.is_zero()) {
    throw std::invalid_argument("perron_certificate: zero polynomial");
  }
  IntPolynomial shifted = g;
  const IntPolynomial one = IntPolynomial::constant(1);
  for (int power = 0; power <= max_power; ++power) {
    if (power > 0) {
      shifted = shifted * IntPolynomial{1, 1};
    }
    const IntPolynomial h = shifted + one;
    bool ok = h.coeff(0) == 0;
    long long support = 0;
    for (std::size_t i = 1; ok && i < h.coeffs().size(); ++i) {
      if (h.coeff(i) < 0) {
        ok = false;
      } else if (h.coeff(i) > 0) {
        support = std::gcd(support, static_cast<long long>(i));
      }
    }
    if (ok && support == 1) {
      return PerronCertificate{power, h.coeffs(), support};
    }
  }
  return std::nullopt;
}

namespace {

// (x + 1)^power * g(x), exactly.
BigRat companion_value(const IntPolynomial& g, int power, const BigRat& x) {
  BigRat v = g(x);
  const BigRat xp1 = x + 1;
  for (int i = 0; i < power; ++i) {
    v *= xp1;
  }
  return v;
}

}  // namespace

GrowthRate growth_rate(const IntPolynomial& g, const PerronCertificate& cert, const BigRat& eps) {
  if (eps <= 0) {
    throw std::invalid_argument("growth_rate: eps must be positive");
  }
  {
    // The certificate must actually belong to g.
    IntPolynomial check = g;
    for (int i = 0; i < cert.power; ++i) {
      check = check * IntPolynomial{1, 1};
    }
    check = check + IntPolynomial::constant(1);
    if (check.coeffs() != cert.h_coeffs) {
      throw std::invalid_argument("growth_rate: certificate does not match polynomial");
    }
  }
  // h(x) - 1 = (x+1)^power g(x) is strictly increasing on [0, 1] because h
  // has non-negative coefficients, so the sign change brackets the unique
  // smallest positive root of g.
  BigRat lo = 0;
  BigRat hi = 1;
  if (companion_value(g, cert.power, hi) <= 0) {
    throw std::runtime_error("growth_rate: no root bracket inside (0, 1)");
  }
  while (hi - lo > eps) {
    BigRat mid = (lo + hi) / 2;
    const BigRat v = companion_value(g, cert.power, mid);
    if (v == 0) {
      lo = mid;
      hi = mid;
      break;
    }
    (v < 0 ? lo : hi) = mid;
  }
  if (lo == 0) {
    throw std::runtime_error("growth_rate: root below requested precision");
  }
  const BigRat tau_lo = 1 / hi;
  const BigRat tau_hi = 1 / lo;
  GrowthRate rate;
  rate.lo = lo;
  rate.hi = hi;
  rate.tau = ((tau_lo + tau_hi) / 2).convert_to<double>();
  rate.tau_error = ((tau_hi - tau_lo) / 2).convert_to<double>() + std::abs(rate.tau) * 1e-15;
  return rate;
}

std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& p) {
  const int deg = p.degree();
  if (deg < 1) {
    throw std::invalid_argument("polynomial_roots: degree must be at least 1");
  }
  std::vector<std::complex<double>> c(deg + 1);
  for (int i = 0; i <= deg; ++i) {
    c[i] = p.coeff(static_cast<std::size_t>(i)).convert_to<double>();
  }
  for (int i = 0; i <= deg; ++i) {
    c[i] /= c[deg];
  }
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (int i = deg; i >= 0; --i) {
      acc = acc * z + c[i];
    }
    return acc;
  };
  // Durand-Kerner from a non-real geometric start; all roots are refined
  // simultaneously.
  std::vector<std::complex<double>> z(deg);
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> acc = 1;
  for (int i = 0; i < deg; ++i) {
    acc *= seed;
    z[i] = acc;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0;
    for (int i = 0; i < deg; ++i) {
      std::complex<double> den = 1;
      for (int j = 0; j < deg; ++j) {
        if (j != i) {
          den *= z[i] - z[j];
        }
      }
      const std::complex<double> step = eval(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) {
      break;
    }
  }
  for (const auto& root : z) {
    const double scale = std::max(1.0, std::pow(std::abs(root), deg));
    if (std::abs(eval(root)) > 1e-10 * scale) {
      throw std::runtime_error("polynomial_roots: iteration did not converge");
    }
  }
  return z;
}

bool numeric_root_check(const IntPolynomial& g, double r1) {
  const auto roots = polynomial_roots(g);
  int close = 0;
  bool separated = true;
  for (const auto& z : roots) {
    if (std::abs(z - std::complex<double>(r1, 0)) < 1e-8) {
      ++close;
    } else if (std::abs(z) < r1 + 1e-8) {
      separated = false;
    }
  }
  return close == 1 && separated;
}

PyramidGrowth compute_growth(const PyramidQuadruple& q, const GrowthOptions& opts) {
  if (opts.root_eps_bits < 1 || opts.root_eps_bits > 4096) {
    throw std::invalid_argument("compute_growth: root_eps_bits out of range");
  }
  PyramidGrowth out{q, steinberg_growth(pyramid_diagram(q)), {}, {}, {}};
  if (out.growth.num()(BigRat(0)) != 1 || out.growth.den()(BigRat(0)) != 1) {
    throw std::runtime_error("compute_growth: growth function not normalized at t = 0");
  }
  out.g = denominator_split(out.growth.den());
  auto cert = perron_certificate(out.g, opts.perron_max_power);
  if (!cert) {
    throw std::runtime_error("compute_growth: no certificate up to power " +
                             std::to_string(opts.perron_max_power));
  }
  out.perron = std::move(*cert);
  out.rate = growth_rate(out.g, out.perron, BigRat(1, BigInt(1) << opts.root_eps_bits));
  return out;
}

}  // namespace coxpyr
