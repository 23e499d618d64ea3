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

#include "coxpyr/diagram.hpp"

#include <stdexcept>

namespace coxpyr {

CoxeterDiagram::CoxeterDiagram(std::vector<std::string> generators)
    : generators_(std::move(generators)),
      orders_(generators_.size(), std::vector<int>(generators_.size(), 2)) {
  for (std::size_t i = 0; i < rank(); ++i) {
    orders_[i][i] = 1;
  }
}

void CoxeterDiagram::set_order(std::size_t i, std::size_t j, int m) {
  if (i >= rank() || j >= rank()) {
    throw std::invalid_argument("set_order: generator index out of range");
  }
  if (i == j) {
    throw std::invalid_argument("set_order: diagonal orders are fixed at 1");
  }
  if (m != kInfiniteOrder && m < 2) {
    throw std::invalid_argument("set_order: order must be >= 2 or infinite");
  }
  orders_[i][j] = m;
  orders_[j][i] = m;
}

int CoxeterDiagram::order(std::size_t i, std::size_t j) const {
  if (i >= rank() || j >= rank()) {
    throw std::invalid_argument("order: generator index out of range");
  }
  return orders_[i][j];
}

bool CoxeterDiagram::has_edge(std::size_t i, std::size_t j) const {
  const int m = order(i, j);
  return i != j && (m == kInfiniteOrder || m >= 3);
}

CoxeterDiagram CoxeterDiagram::restrict_to(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (std::size_t i : keep) {
    if (i >= rank()) {
      throw std::invalid_argument("restrict_to: generator index out of range");
    }
    names.push_back(generators_[i]);
  }
  CoxeterDiagram sub(std::move(names));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (keep[a] == keep[b]) {
        throw std::invalid_argument("restrict_to: repeated generator index");
      }
      sub.set_order(a, b, orders_[keep[a]][keep[b]]);
    }
  }
  return sub;
}

CoxeterDiagram pyramid_diagram(const PyramidQuadruple& q) {
  CoxeterDiagram d({"b", "A", "B", "C", "D"});
  d.set_order(0, 1, q.k());
  d.set_order(0, 2, q.m());
  d.set_order(0, 3, q.l());
  d.set_order(0, 4, q.n());
  d.set_order(1, 3, kInfiniteOrder);
  d.set_order(2, 4, kInfiniteOrder);
  return d;
}

}  // namespace coxpyr
