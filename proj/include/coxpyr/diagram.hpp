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

#ifndef COXPYR_DIAGRAM_HPP
#define COXPYR_DIAGRAM_HPP

#include "coxpyr/quadruple.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace coxpyr {

/// Pair order m(s,t) = infinity, encoded as 0 everywhere in this library.
inline constexpr int kInfiniteOrder = 0;

/// Coxeter system given by its generator set and the symmetric matrix of
/// pairwise orders m(s,t), with m(s,s) = 1 and m(s,t) in {0, 2, 3, ...}
/// off the diagonal (0 meaning infinity).
class CoxeterDiagram {
 public:
  /// Right-angled start: every off-diagonal order is 2 (no edges).
  explicit CoxeterDiagram(std::vector<std::string> generators);

  std::size_t rank() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }

  /// Throws std::invalid_argument for i == j, out-of-range indices, or an
  /// order that is neither kInfiniteOrder nor >= 2.
  void set_order(std::size_t i, std::size_t j, int m);

  int order(std::size_t i, std::size_t j) const;

  /// True when the generators do not commute (order >= 3 or infinite).
  bool has_edge(std::size_t i, std::size_t j) const;

  /// Induced subdiagram on the given generator indices, in the given order.
  CoxeterDiagram restrict_to(const std::vector<std::size_t>& keep) const;

  bool operator==(const CoxeterDiagram&) const = default;

 private:
  std::vector<std::string> generators_;
  std::vector<std::vector<int>> orders_;
};

/// The rank-5 system of the pyramid with label quadruple q.  Generator 0 is
/// the reflection in the base facet b; generators 1..4 are the side facets
/// A, B, C, D.  The base meets the sides at angles pi/k, pi/m, pi/l, pi/n;
/// opposite side facets are parallel (infinite order) and adjacent ones
/// commute.
CoxeterDiagram pyramid_diagram(const PyramidQuadruple& q);

}  // namespace coxpyr

#endif  // COXPYR_DIAGRAM_HPP
