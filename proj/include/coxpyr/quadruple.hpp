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

#ifndef COXPYR_QUADRUPLE_HPP
#define COXPYR_QUADRUPLE_HPP

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace coxpyr {

/// How an adjacent pair of dihedral angles (pi/a, pi/b) at a lateral edge
/// behaves: the edge meets the apex sphere transversally (material), is
/// tangent to it (ideal), or misses it (excluded, not a valid pyramid).
enum class PairFlavor { material, ideal, excluded };

/// Classification of 1/a + 1/b against 1/2 in exact integer arithmetic.
/// Requires a, b >= 2.
PairFlavor adjacent_pair_flavor(int a, int b);
inline bool adjacent_pair_ok(int a, int b) {
  return adjacent_pair_flavor(a, b) != PairFlavor::excluded;
}

/// Label quadruple (k, l, m, n) of a pyramid over a quadrilateral base.
/// The base angles are pi/k and pi/l on one diagonal pair, pi/m and pi/n on
/// the other; walking around the base the side faces carry k, m, l, n in
/// cyclic order, so the adjacent label pairs are (k,m), (m,l), (l,n), (n,k).
///
/// Validity (checked by create): every adjacent pair satisfies
/// 1/a + 1/b >= 1/2, and neither k = l = 2 nor m = n = 2.
class PyramidQuadruple {
 public:
  /// Validates and constructs.  Throws std::domain_error naming the first
  /// violated condition.
  static PyramidQuadruple create(int k, int l, int m, int n);

  /// Parses "k,l,m,n" (optionally with spaces) and validates.  Throws
  /// std::invalid_argument on malformed input, std::domain_error as create.
  static PyramidQuadruple parse(std::string_view text);

  int k() const { return k_; }
  int l() const { return l_; }
  int m() const { return m_; }
  int n() const { return n_; }
  std::array<int, 4> labels() const { return {k_, l_, m_, n_}; }

  /// Side-face labels in cyclic order around the base: (k, m, l, n).
  std::array<int, 4> side_sequence() const { return {k_, m_, l_, n_}; }

  /// Representative-of-orbit conditions: k <= l, m <= n, k <= m, and
  /// l <= n when k == m.
  bool is_canonical() const;

  /// "k,l,m,n"
  std::string to_string() const;

  auto operator<=>(const PyramidQuadruple&) const = default;

 private:
  PyramidQuadruple(int k, int l, int m, int n) : k_(k), l_(l), m_(m), n_(n) {}

  int k_, l_, m_, n_;
};

/// The eight relabelings of a cyclic side sequence (rotations and
/// reversals), i.e. the symmetries of the base quadrilateral.
std::array<std::array<int, 4>, 8> dihedral_images(const std::array<int, 4>& sides);

/// Unique canonical representative of the relabeling orbit of (k, l, m, n).
/// Validates the raw tuple first (validity is orbit-invariant).
PyramidQuadruple canonicalize(int k, int l, int m, int n);

/// All canonical valid quadruples, sorted lexicographically.
std::vector<PyramidQuadruple> enumerate_pyramids();

/// One corner of the projected base rectangle.  `edge` names the pair of
/// side faces meeting there ("AB", "BC", "CD" or "DA" in cyclic order),
/// `labels` their Coxeter labels, and (x, y) the corner coordinates.
struct LinkCorner {
  std::string edge;
  std::array<int, 2> labels;
  PairFlavor flavor;
  double x;
  double y;
};

/// The apex link of the pyramid, projected to the rectangle
/// [-cos(pi/n), cos(pi/m)] x [-cos(pi/k), cos(pi/l)] inside the closed unit
/// disk.  Corners on the unit circle are exactly the ideal pairs.
struct ProjectedLink {
  double x_min, x_max;
  double y_min, y_max;
  std::array<LinkCorner, 4> corners;  // AB, BC, CD, DA
};

ProjectedLink projected_link(const PyramidQuadruple& q);

}  // namespace coxpyr

#endif  // COXPYR_QUADRUPLE_HPP
