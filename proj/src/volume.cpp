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

#include "coxpyr/volume.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

namespace coxpyr {

namespace {

constexpr double kPi = std::numbers::pi;

// c[n] = zeta(2n) / (n (2n+1) pi^(2n)), the series coefficients of
// L(x)/x - 1 + log(2x).  zeta(2n) is closed-form for small n and a
// rapidly convergent direct sum beyond.
const std::vector<double>& series_coefficients_table() {
  static const std::vector<double> table = [] {
    constexpr int kTerms = 48;
    const double pi2 = kPi * kPi;
    std::vector<double> zeta{0.0,
                             pi2 / 6.0,
                             pi2 * pi2 / 90.0,
                             pi2 * pi2 * pi2 / 945.0,
                             pi2 * pi2 * pi2 * pi2 / 9450.0,
                             pi2 * pi2 * pi2 * pi2 * pi2 / 93555.0};
    for (int n = 6; n <= kTerms; ++n) {
      double s = 0;
      for (int i = 60; i >= 1; --i) {
        s += std::pow(i, -2.0 * n);
      }
      zeta.push_back(s);
    }
    std::vector<double> c(kTerms + 1, 0.0);
    double pipow = 1.0;
    for (int n = 1; n <= kTerms; ++n) {
      pipow *= pi2;
      c[n] = zeta[n] / (n * (2 * n + 1) * pipow);
    }
    return c;
  }();
  return table;
}

}  // namespace

double lobachevsky(double theta, double eps) {
  if (!(eps >= 1e-15 && eps <= 1.0)) {
    throw std::invalid_argument("lobachevsky: eps must lie in [1e-15, 1]");
  }
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("lobachevsky: theta must be finite");
  }
  double x = std::remainder(theta, kPi);
  const double sign = x < 0 ? -1.0 : 1.0;
  x = std::abs(x);
  if (x == 0.0) {
    return 0.0;
  }
  const auto& c = series_coefficients_table();
  const double x2 = x * x;
  double sum = 0.0;
  double xpow = 1.0;
  bool done = false;
  for (std::size_t n = 1; n < c.size(); ++n) {
    xpow *= x2;
    const double term = c[n] * xpow;
    sum += term;
    // Successive terms shrink at least geometrically with ratio
    // (x/pi)^2 <= 1/4, so the tail is below term / 3.
    if (x * term < eps / 4.0) {
      done = true;
      break;
    }
  }
  if (!done) {
    throw std::runtime_error("lobachevsky: series did not reach requested eps");
  }
  return sign * x * (1.0 - std::log(2.0 * x) + sum);
}

double ortho_tet_volume(double theta, double zeta, double eps) {
  constexpr double slack = 1e-9;
  if (!(theta >= -slack && theta <= kPi / 2 + slack) ||
      !(zeta >= -slack && zeta <= kPi / 2 + slack)) {
    throw std::domain_error("ortho_tet_volume: angles must lie in [0, pi/2]");
  }
  return (lobachevsky(theta + zeta, eps) + lobachevsky(theta - zeta, eps) +
          2.0 * lobachevsky(kPi / 2 - theta, eps)) /
         4.0;
}

double ortho_pyramid_volume(double a, double b, double eps) {
  constexpr double slack = 1e-12;
  if (!(a >= 0 && a <= 1 && b >= 0 && b <= 1) || a * a + b * b > 1.0 + slack) {
    throw std::domain_error("ortho_pyramid_volume: corner must lie in the closed unit disk");
  }
  if (a == 0.0 || b == 0.0) {
    return 0.0;
  }
  const double alpha = std::atan2(b, a);
  const double acos_a = std::acos(std::min(a, 1.0));
  const double acos_b = std::acos(std::min(b, 1.0));
  return ortho_tet_volume(kPi / 2 - alpha, acos_b, eps) + ortho_tet_volume(alpha, acos_a, eps);
}

PyramidVolume pyramid_volume(const PyramidQuadruple& q, double eps) {
  const ProjectedLink link = projected_link(q);
  // Signed cumulative volume over [0, x] x [0, y] extends the corner
  // pyramid evenly across the axes, so the rectangle integral is the usual
  // four-corner alternating sum.
  auto quadrant_sign = [](double v) { return v > 0 ? 1 : v < 0 ? -1 : 0; };
  PyramidVolume out{q, {}, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    const LinkCorner& corner = link.corners[i];
    const int ie = (corner.edge == "BC" || corner.edge == "DA") ? 1 : -1;
    VolumePiece piece;
    piece.corner = corner.edge;
    piece.sign = ie * quadrant_sign(corner.x) * quadrant_sign(corner.y);
    piece.a = std::abs(corner.x);
    piece.b = std::abs(corner.y);
    piece.volume = piece.sign == 0 ? 0.0 : ortho_pyramid_volume(piece.a, piece.b, eps);
    out.total += piece.sign * piece.volume;
    out.pieces[i] = std::move(piece);
  }
  return out;
}

namespace {

struct QuadBox {
  double x0, x1, y0, y1;
  double value;  // 5x5 tensor Gauss-Legendre estimate
  double error;  // |5x5 - 3x3|

  bool operator<(const QuadBox& other) const { return error < other.error; }
};

// Hyperbolic volume above the unit hemisphere, as a plane integral.
double density(double x, double y) {
  return 0.5 / (1.0 - x * x - y * y);
}

template <std::size_t N>
double tensor_gl(const std::array<double, N>& nodes, const std::array<double, N>& weights,
                 double x0, double x1, double y0, double y1) {
  const double hx = (x1 - x0) / 2;
  const double hy = (y1 - y0) / 2;
  const double cx = (x0 + x1) / 2;
  const double cy = (y0 + y1) / 2;
  double sum = 0;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      sum += weights[i] * weights[j] * density(cx + hx * nodes[i], cy + hy * nodes[j]);
    }
  }
  return sum * hx * hy;
}

QuadBox make_box(double x0, double x1, double y0, double y1) {
  static const std::array<double, 3> n3{-0.774596669241483377, 0.0, 0.774596669241483377};
  static const std::array<double, 3> w3{5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  static const std::array<double, 5> n5{-0.906179845938663993, -0.538469310105683091, 0.0,
                                        0.538469310105683091, 0.906179845938663993};
  static const std::array<double, 5> w5{0.236926885056189088, 0.478628670499366468,
                                        0.568888888888888889, 0.478628670499366468,
                                        0.236926885056189088};
  QuadBox box{x0, x1, y0, y1, 0.0, 0.0};
  const double coarse = tensor_gl(n3, w3, x0, x1, y0, y1);
  box.value = tensor_gl(n5, w5, x0, x1, y0, y1);
  box.error = std::abs(box.value - coarse);
  return box;
}

}  // namespace

double volume_quadrature_oracle(const PyramidQuadruple& q, double eps) {
  if (!(eps >= 1e-8)) {
    throw std::invalid_argument("volume_quadrature_oracle: eps must be at least 1e-8");
  }
  const ProjectedLink link = projected_link(q);
  std::priority_queue<QuadBox> queue;
  queue.push(make_box(link.x_min, link.x_max, link.y_min, link.y_max));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  // The integrand blows up only toward ideal corners, where tangency to the
  // unit circle keeps it integrable; worst-first refinement concentrates
  // boxes there.
  constexpr std::size_t kBudget = 1u << 21;
  std::size_t spawned = 1;
  while (total_error > eps / 2) {
    if (spawned + 4 > kBudget) {
      throw std::runtime_error("volume_quadrature_oracle: refinement budget exhausted");
    }
    const QuadBox worst = queue.top();
    queue.pop();
    total_value -= worst.value;
    total_error -= worst.error;
    const double xm = (worst.x0 + worst.x1) / 2;
    const double ym = (worst.y0 + worst.y1) / 2;
    for (const QuadBox& child :
         {make_box(worst.x0, xm, worst.y0, ym), make_box(xm, worst.x1, worst.y0, ym),
          make_box(worst.x0, xm, ym, worst.y1), make_box(xm, worst.x1, ym, worst.y1)}) {
      total_value += child.value;
      total_error += child.error;
      queue.push(child);
    }
    spawned += 4;
  }
  return total_value;
}

}  // namespace coxpyr
