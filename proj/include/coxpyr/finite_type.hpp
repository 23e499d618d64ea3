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

#ifndef COXPYR_FINITE_TYPE_HPP
#define COXPYR_FINITE_TYPE_HPP

#include "coxpyr/diagram.hpp"
#include "coxpyr/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coxpyr {

/// Irreducible finite Coxeter types.  I2 carries its edge label m; the
/// crystallographic rank-2 coincidences are reported as A2 = I2(3) and
/// B2 = I2(4).
enum class CoxeterType { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

struct FiniteComponent {
  CoxeterType type;
  int rank;
  int label;  // edge label m for I2, otherwise 0

  bool operator==(const FiniteComponent&) const = default;
  auto operator<=>(const FiniteComponent&) const = default;
};

std::string component_name(const FiniteComponent& c);

/// Exponents m_1 <= ... <= m_rank of the component.
std::vector<int> component_exponents(const FiniteComponent& c);

/// Product decomposition of a finite Coxeter system into irreducible
/// components, sorted.  The empty vector is the trivial (rank 0) system.
using FiniteTypeDecomposition = std::vector<FiniteComponent>;

std::string decomposition_name(const FiniteTypeDecomposition& d);

/// Matches each connected component of the diagram against the finite
/// catalogue by shape alone (degrees, arm lengths, edge labels); returns
/// std::nullopt as soon as one component is not finite.
std::optional<FiniteTypeDecomposition> recognize_finite_type(const CoxeterDiagram& d);

inline bool is_finite_type(const CoxeterDiagram& d) {
  return recognize_finite_type(d).has_value();
}

/// Word-length growth polynomial of a finite system, the product of
/// 1 + t + ... + t^(m_i) over all exponents m_i of all components.
IntPolynomial solomon_growth(const FiniteTypeDecomposition& d);

/// A parabolic subset, addressed by a generator bitmask of the ambient
/// diagram, together with the finite type of the induced subdiagram.
struct ParabolicSubset {
  std::uint32_t mask;
  FiniteTypeDecomposition decomposition;
};

/// All generator subsets (including the empty one) whose induced diagram is
/// of finite type, sorted by popcount then mask.  The family is closed
/// downwards under inclusion.  Throws std::invalid_argument above rank 20.
std::vector<ParabolicSubset> finite_parabolic_family(const CoxeterDiagram& d);

}  // namespace coxpyr

#endif  // COXPYR_FINITE_TYPE_HPP
