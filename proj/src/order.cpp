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

#include "coxpyr/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxpyr {

bool pyramid_leq(const PyramidQuadruple& q1, const PyramidQuadruple& q2) {
  const auto target = q2.side_sequence();
  for (const auto& image : dihedral_images(q1.side_sequence())) {
    bool dominated = true;
    for (int i = 0; i < 4; ++i) {
      if (image[i] > target[i]) {
        dominated = false;
        break;
      }
    }
    if (dominated) {
      return true;
    }
  }
  return false;
}

bool OrderRelation::leq(std::size_t i, std::size_t j) const {
  if (i == j) {
    return true;
  }
  return std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) != pairs.end();
}

std::size_t OrderRelation::index_of(const PyramidQuadruple& q) const {
  const auto it = std::find(nodes.begin(), nodes.end(), q);
  if (it == nodes.end()) {
    throw std::invalid_argument("OrderRelation: node " + q.to_string() + " not present");
  }
  return static_cast<std::size_t>(it - nodes.begin());
}

OrderRelation build_order() {
  return build_order(enumerate_pyramids());
}

OrderRelation build_order(std::vector<PyramidQuadruple> nodes) {
  OrderRelation order;
  order.nodes = std::move(nodes);
  const std::size_t n = order.nodes.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && pyramid_leq(order.nodes[i], order.nodes[j])) {
        below[i][j] = true;
        order.pairs.emplace_back(i, j);
      }
    }
  }
  // Covering pairs: strict pairs with nothing strictly in between.
  for (const auto& [i, j] : order.pairs) {
    bool covering = true;
    for (std::size_t k = 0; k < n && covering; ++k) {
      if (below[i][k] && below[k][j]) {
        covering = false;
      }
    }
    if (covering) {
      order.hasse_edges.emplace_back(i, j);
    }
  }
  return order;
}

MonotonicityReport monotonicity_report(const OrderRelation& order,
                                       const std::vector<double>& values, double tol) {
  if (values.size() != order.nodes.size()) {
    throw std::invalid_argument("monotonicity_report: one value per node required");
  }
  MonotonicityReport report{tol, {}, {}};
  for (const auto& [i, j] : order.pairs) {
    if (values[i] > values[j] + tol) {
      report.forward_violations.emplace_back(i, j);
    }
  }
  for (std::size_t i = 0; i < order.nodes.size(); ++i) {
    for (std::size_t j = 0; j < order.nodes.size(); ++j) {
      if (i != j && values[i] <= values[j] + tol && !order.leq(i, j)) {
        report.converse_exceptions.emplace_back(i, j);
      }
    }
  }
  return report;
}

}  // namespace coxpyr
