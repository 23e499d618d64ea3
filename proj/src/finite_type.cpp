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

#include "coxpyr/finite_type.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace coxpyr {

namespace {

// Recognition of one connected component, given its node indices inside d.
// Every test is a pure shape test; the catalogue of finite diagrams is
// exactly: paths A, B (one 4 at an end), F4 (a 4 in the middle of 4 nodes),
// H3/H4 (one 5 at an end), I2(m), and the simply laced forks D and E6..E8.
std::optional<FiniteComponent> recognize_component(const CoxeterDiagram& d,
                                                   const std::vector<std::size_t>& nodes) {
  const int rank = static_cast<int>(nodes.size());
  if (rank == 1) {
    return FiniteComponent{CoxeterType::A, 1, 0};
  }

  int edge_count = 0;
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (!d.has_edge(nodes[a], nodes[b])) {
        continue;
      }
      if (d.order(nodes[a], nodes[b]) == kInfiniteOrder) {
        return std::nullopt;
      }
      ++edge_count;
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  // A connected graph that is not a tree contains a cycle.
  if (edge_count != rank - 1) {
    return std::nullopt;
  }

  std::size_t fork = nodes.size();
  std::size_t leaf = nodes.size();
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    if (adj[a].size() >= 4) {
      return std::nullopt;
    }
    if (adj[a].size() == 3) {
      if (fork != nodes.size()) {
        return std::nullopt;
      }
      fork = a;
    }
    if (adj[a].size() == 1) {
      leaf = a;
    }
  }

  auto label = [&](std::size_t a, std::size_t b) { return d.order(nodes[a], nodes[b]); };

  if (fork != nodes.size()) {
    std::vector<int> arms;
    for (std::size_t start : adj[fork]) {
      int len = 0;
      std::size_t prev = fork;
      std::size_t cur = start;
      while (true) {
        if (label(prev, cur) != 3) {
          return std::nullopt;  // forked diagrams are simply laced
        }
        ++len;
        std::size_t next = nodes.size();
        for (std::size_t w : adj[cur]) {
          if (w != prev) {
            next = w;
          }
        }
        if (next == nodes.size()) {
          break;
        }
        prev = cur;
        cur = next;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      return FiniteComponent{CoxeterType::D, rank, 0};
    }
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      static constexpr CoxeterType e[] = {CoxeterType::E6, CoxeterType::E7, CoxeterType::E8};
      return FiniteComponent{e[arms[2] - 2], rank, 0};
    }
    return std::nullopt;
  }

  // No fork: the component is a path.  Walk it from a leaf and collect the
  // consecutive edge labels.
  std::vector<int> labels;
  {
    std::size_t prev = nodes.size();
    std::size_t cur = leaf;
    while (true) {
      std::size_t next = nodes.size();
      for (std::size_t w : adj[cur]) {
        if (w != prev) {
          next = w;
        }
      }
      if (next == nodes.size()) {
        break;
      }
      labels.push_back(label(cur, next));
      prev = cur;
      cur = next;
    }
  }

  if (rank == 2) {
    if (labels[0] == 3) {
      return FiniteComponent{CoxeterType::A, 2, 0};
    }
    if (labels[0] == 4) {
      return FiniteComponent{CoxeterType::B, 2, 0};
    }
    return FiniteComponent{CoxeterType::I2, 2, labels[0]};
  }

  int marked = 0;
  std::size_t where = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 3) {
      ++marked;
      where = i;
    }
  }
  if (marked == 0) {
    return FiniteComponent{CoxeterType::A, rank, 0};
  }
  if (marked > 1) {
    return std::nullopt;
  }
  const bool at_end = where == 0 || where + 1 == labels.size();
  if (labels[where] == 4) {
    if (at_end) {
      return FiniteComponent{CoxeterType::B, rank, 0};
    }
    if (rank == 4) {
      return FiniteComponent{CoxeterType::F4, 4, 0};
    }
    return std::nullopt;
  }
  if (labels[where] == 5 && at_end) {
    if (rank == 3) {
      return FiniteComponent{CoxeterType::H3, 3, 0};
    }
    if (rank == 4) {
      return FiniteComponent{CoxeterType::H4, 4, 0};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string component_name(const FiniteComponent& c) {
  std::ostringstream out;
  switch (c.type) {
    case CoxeterType::A:
      out << "A" << c.rank;
      break;
    case CoxeterType::B:
      out << "B" << c.rank;
      break;
    case CoxeterType::D:
      out << "D" << c.rank;
      break;
    case CoxeterType::E6:
      out << "E6";
      break;
    case CoxeterType::E7:
      out << "E7";
      break;
    case CoxeterType::E8:
      out << "E8";
      break;
    case CoxeterType::F4:
      out << "F4";
      break;
    case CoxeterType::H3:
      out << "H3";
      break;
    case CoxeterType::H4:
      out << "H4";
      break;
    case CoxeterType::I2:
      out << "I2(" << c.label << ")";
      break;
  }
  return out.str();
}

std::vector<int> component_exponents(const FiniteComponent& c) {
  std::vector<int> e;
  switch (c.type) {
    case CoxeterType::A:
      for (int i = 1; i <= c.rank; ++i) {
        e.push_back(i);
      }
      break;
    case CoxeterType::B:
      for (int i = 1; i <= c.rank; ++i) {
        e.push_back(2 * i - 1);
      }
      break;
    case CoxeterType::D:
      for (int i = 1; i < c.rank; ++i) {
        e.push_back(2 * i - 1);
      }
      e.push_back(c.rank - 1);
      std::sort(e.begin(), e.end());
      break;
    case CoxeterType::E6:
      e = {1, 4, 5, 7, 8, 11};
      break;
    case CoxeterType::E7:
      e = {1, 5, 7, 9, 11, 13, 17};
      break;
    case CoxeterType::E8:
      e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case CoxeterType::F4:
      e = {1, 5, 7, 11};
      break;
    case CoxeterType::H3:
      e = {1, 5, 9};
      break;
    case CoxeterType::H4:
      e = {1, 11, 19, 29};
      break;
    case CoxeterType::I2:
      e = {1, c.label - 1};
      break;
  }
  return e;
}

std::string decomposition_name(const FiniteTypeDecomposition& d) {
  if (d.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) {
      out += " x ";
    }
    out += component_name(d[i]);
  }
  return out;
}

std::optional<FiniteTypeDecomposition> recognize_finite_type(const CoxeterDiagram& d) {
  const std::size_t n = d.rank();
  std::vector<char> seen(n, 0);
  FiniteTypeDecomposition out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) {
      continue;
    }
    std::vector<std::size_t> component{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!seen[j] && d.has_edge(component[head], j)) {
          seen[j] = 1;
          component.push_back(j);
        }
      }
    }
    auto c = recognize_component(d, component);
    if (!c) {
      return std::nullopt;
    }
    out.push_back(*c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntPolynomial solomon_growth(const FiniteTypeDecomposition& d) {
  IntPolynomial f = IntPolynomial::constant(1);
  for (const auto& c : d) {
    for (int m : component_exponents(c)) {
      f = f * IntPolynomial::bracket(static_cast<unsigned>(m) + 1);
    }
  }
  return f;
}

std::vector<ParabolicSubset> finite_parabolic_family(const CoxeterDiagram& d) {
  if (d.rank() > 20) {
    throw std::invalid_argument("finite_parabolic_family: rank too large for subset sweep");
  }
  const std::uint32_t total = 1u << d.rank();
  std::vector<ParabolicSubset> family;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d.rank(); ++i) {
      if (mask & (1u << i)) {
        keep.push_back(i);
      }
    }
    auto type = recognize_finite_type(d.restrict_to(keep));
    if (type) {
      family.push_back({mask, std::move(*type)});
    }
  }
  std::sort(family.begin(), family.end(), [](const ParabolicSubset& a, const ParabolicSubset& b) {
    const int pa = std::popcount(a.mask);
    const int pb = std::popcount(b.mask);
    return pa != pb ? pa < pb : a.mask < b.mask;
  });
  return family;
}

}  // namespace coxpyr
