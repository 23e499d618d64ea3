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

#ifndef COXPYR_VOLUME_HPP
#define COXPYR_VOLUME_HPP

#include "coxpyr/quadruple.hpp"

#include <array>
#include <string>

namespace coxpyr {

/// The Lobachevsky function -integral of log|2 sin u| du from 0 to theta,
/// evaluated after reduction to |theta| <= pi/2 (it is odd and pi-periodic)
/// by a zeta-coefficient power series with tail below eps.
/// eps must lie in [1e-15, 1].
double lobachevsky(double theta, double eps = 1e-12);

/// Volume of the orthoscheme tetrahedron with one ideal vertex, given by
/// (L(theta + zeta) + L(theta - zeta) + 2 L(pi/2 - theta)) / 4 where L is
/// the Lobachevsky function.  Requires theta, zeta in [0, pi/2].
double ortho_tet_volume(double theta, double zeta, double eps = 1e-12);

/// Volume of the solid above the unit hemisphere over the axis-aligned
/// rectangle [0, a] x [0, b], for a^2 + b^2 <= 1.  Zero when a or b is 0;
/// otherwise split along the diagonal into two one-ideal-vertex
/// orthoschemes.  Symmetric in (a, b).
double ortho_pyramid_volume(double a, double b, double eps = 1e-12);

/// One corner contribution of the rectangle decomposition: the corner tag,
/// the combined inclusion-exclusion and quadrant sign in {-1, 0, +1}, the
/// absolute corner coordinates and the unsigned piece volume.
struct VolumePiece {
  std::string corner;
  int sign;
  double a;
  double b;
  double volume;
};

struct PyramidVolume {
  PyramidQuadruple quadruple;
  std::array<VolumePiece, 4> pieces;  // AB, BC, CD, DA
  double total;
};

/// Volume of the pyramid: the projected-link rectangle integral split by
/// the coordinate axes into at most four corner pieces with signs.
PyramidVolume pyramid_volume(const PyramidQuadruple& q, double eps = 1e-12);

/// Direct adaptive Gauss-Legendre integration of the volume form over the
/// projected-link rectangle; wholly independent of the Lobachevsky path.
/// eps must be at least 1e-8.  Throws std::runtime_error if the refinement
/// budget is exhausted before reaching eps.
double volume_quadrature_oracle(const PyramidQuadruple& q, double eps = 1e-6);

}  // namespace coxpyr

#endif  // COXPYR_VOLUME_HPP
