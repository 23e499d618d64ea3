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

#include "coxpyr/quadruple.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxpyr {

PairFlavor adjacent_pair_flavor(int a, int b) {
  if (a < 2 || b < 2) {
    throw std::invalid_argument("adjacent_pair_flavor: labels must be >= 2");
  }
  // 1/a + 1/b vs 1/2, cleared of denominators.
  const long long s = 2LL * (a + b) - 1LL * a * b;
  if (s > 0) {
    return PairFlavor::material;
  }
  return s == 0 ? PairFlavor::ideal : PairFlavor::excluded;
}

namespace {

bool validate(int k, int l, int m, int n, std::string* why) {
  const std::array<int, 4> labels{k, l, m, n};
  const std::array<const char*, 4> names{"k", "l", "m", "n"};
  for (std::size_t i = 0; i < 4; ++i) {
    if (labels[i] < 2) {
      if (why) {
        std::ostringstream out;
        out << "label " << names[i] << " = " << labels[i] << " must be an integer >= 2";
        *why = out.str();
      }
      return false;
    }
  }
  const std::array<std::array<int, 2>, 4> pairs{{{k, m}, {m, l}, {l, n}, {n, k}}};
  const std::array<const char*, 4> pair_names{"(k,m)", "(m,l)", "(l,n)", "(n,k)"};
  for (std::size_t i = 0; i < 4; ++i) {
    if (adjacent_pair_flavor(pairs[i][0], pairs[i][1]) == PairFlavor::excluded) {
      if (why) {
        std::ostringstream out;
        out << "adjacent pair " << pair_names[i] << " = (" << pairs[i][0] << "," << pairs[i][1]
            << ") violates 1/a + 1/b >= 1/2";
        *why = out.str();
      }
      return false;
    }
  }
  if (k == 2 && l == 2) {
    if (why) {
      *why = "degenerate base: k = l = 2";
    }
    return false;
  }
  if (m == 2 && n == 2) {
    if (why) {
      *why = "degenerate base: m = n = 2";
    }
    return false;
  }
  return true;
}

PyramidQuadruple quad_of_sides(const std::array<int, 4>& s) {
  // Side sequence (A,B,C,D) carries (k,m,l,n).
  return PyramidQuadruple::create(s[0], s[2], s[1], s[3]);
}

}  // namespace

PyramidQuadruple PyramidQuadruple::create(int k, int l, int m, int n) {
  std::string why;
  if (!validate(k, l, m, n, &why)) {
    throw std::domain_error("invalid pyramid quadruple (" + std::to_string(k) + "," +
                            std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) +
                            "): " + why);
  }
  return {k, l, m, n};
}

PyramidQuadruple PyramidQuadruple::parse(std::string_view text) {
  std::array<int, 4> v{};
  std::size_t field = 0;
  std::size_t pos = 0;
  while (field < 4) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v[field]);
    if (ec != std::errc() || ptr == begin) {
      throw std::invalid_argument("malformed quadruple \"" + std::string(text) +
                                  "\": expected \"k,l,m,n\"");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    ++field;
    if (field < 4) {
      if (pos >= text.size() || text[pos] != ',') {
        throw std::invalid_argument("malformed quadruple \"" + std::string(text) +
                                    "\": expected \"k,l,m,n\"");
      }
      ++pos;
    }
  }
  if (pos != text.size()) {
    throw std::invalid_argument("malformed quadruple \"" + std::string(text) +
                                "\": trailing characters");
  }
  return create(v[0], v[1], v[2], v[3]);
}

bool PyramidQuadruple::is_canonical() const {
  if (k_ > l_ || m_ > n_ || k_ > m_) {
    return false;
  }
  return k_ != m_ || l_ <= n_;
}

std::string PyramidQuadruple::to_string() const {
  std::ostringstream out;
  out << k_ << "," << l_ << "," << m_ << "," << n_;
  return out.str();
}

std::array<std::array<int, 4>, 8> dihedral_images(const std::array<int, 4>& sides) {
  std::array<std::array<int, 4>, 8> out;
  std::array<int, 4> rev{sides[3], sides[2], sides[1], sides[0]};
  for (int r = 0; r < 4; ++r) {
    for (int i = 0; i < 4; ++i) {
      out[r][i] = sides[(i + r) % 4];
      out[4 + r][i] = rev[(i + r) % 4];
    }
  }
  return out;
}

PyramidQuadruple canonicalize(int k, int l, int m, int n) {
  // Validity only involves cyclically adjacent and opposite side pairs, so
  // it is invariant under relabeling; checking the raw tuple suffices.
  PyramidQuadruple raw = PyramidQuadruple::create(k, l, m, n);
  std::set<PyramidQuadruple> found;
  for (const auto& image : dihedral_images(raw.side_sequence())) {
    PyramidQuadruple q = quad_of_sides(image);
    if (q.is_canonical()) {
      found.insert(q);
    }
  }
  if (found.size() != 1) {
    throw std::logic_error("canonicalize: orbit of (" + raw.to_string() + ") has " +
                           std::to_string(found.size()) + " canonical members");
  }
  return *found.begin();
}

std::vector<PyramidQuadruple> enumerate_pyramids() {
  // A label of 7 or more forces both of its cyclic neighbours down to 2,
  // and those two neighbours form an opposite pair, which the degeneracy
  // condition excludes.  Labels are therefore at most 6.
  constexpr int kMaxLabel = 6;
  std::vector<PyramidQuadruple> out;
  for (int k = 2; k <= kMaxLabel; ++k) {
    for (int l = 2; l <= kMaxLabel; ++l) {
      for (int m = 2; m <= kMaxLabel; ++m) {
        for (int n = 2; n <= kMaxLabel; ++n) {
          if (!validate(k, l, m, n, nullptr)) {
            continue;
          }
          PyramidQuadruple q = PyramidQuadruple::create(k, l, m, n);
          if (q.is_canonical()) {
            out.push_back(q);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProjectedLink projected_link(const PyramidQuadruple& q) {
  const double pi = std::numbers::pi;
  auto c = [&](int a) { return std::cos(pi / a); };
  ProjectedLink link;
  link.x_min = -c(q.n());
  link.x_max = c(q.m());
  link.y_min = -c(q.k());
  link.y_max = c(q.l());
  auto corner = [&](const char* edge, int a, int b, double x, double y) {
    return LinkCorner{edge, {a, b}, adjacent_pair_flavor(a, b), x, y};
  };
  link.corners = {corner("AB", q.k(), q.m(), link.x_max, link.y_min),
                  corner("BC", q.m(), q.l(), link.x_max, link.y_max),
                  corner("CD", q.l(), q.n(), link.x_min, link.y_max),
                  corner("DA", q.n(), q.k(), link.x_min, link.y_min)};
  return link;
}

}  // namespace coxpyr
