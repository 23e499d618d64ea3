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

#ifndef COXPYR_ORDER_HPP
#define COXPYR_ORDER_HPP

#include "coxpyr/quadruple.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace coxpyr {

/// Geometric inclusion order: q1 <= q2 when some relabeling of q1's side
/// sequence is dominated componentwise by q2's.  Larger labels mean larger
/// dihedral-angle denominators, i.e. a wider projected rectangle.
bool pyramid_leq(const PyramidQuadruple& q1, const PyramidQuadruple& q2);

/// The inclusion order over a node set, with its covering (Hasse) edges.
/// `pairs` holds the strict comparable ordered pairs as node indices; the
/// reflexive pairs are implied.
struct OrderRelation {
  std::vector<PyramidQuadruple> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;

  bool leq(std::size_t i, std::size_t j) const;
  std::size_t index_of(const PyramidQuadruple& q) const;  // throws if absent
};

/// Order over all 33 pyramids (or a caller-provided node set).
OrderRelation build_order();
OrderRelation build_order(std::vector<PyramidQuadruple> nodes);

/// Comparison of the order against a quantity attached to each node
/// (growth rates in practice).  Forward violations are comparable pairs
/// where the quantity strictly decreases by more than tol; converse
/// exceptions are incomparable ordered pairs whose quantities are
/// nevertheless ordered within tol.
struct MonotonicityReport {
  double tol;
  std::vector<std::pair<std::size_t, std::size_t>> forward_violations;
  std::vector<std::pair<std::size_t, std::size_t>> converse_exceptions;
};

MonotonicityReport monotonicity_report(const OrderRelation& order,
                                       const std::vector<double>& values, double tol = 1e-9);

}  // namespace coxpyr

#endif  // COXPYR_ORDER_HPP
