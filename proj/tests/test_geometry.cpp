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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coxpyr/quadruple.hpp"
#include "golden_data.hpp"

#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <vector>

using coxpyr::PairFlavor;
using coxpyr::PyramidQuadruple;

namespace {

PyramidQuadruple quad_of_sides(const std::array<int, 4>& s) {
  // side order (A, B, C, D) carries (k, m, l, n)
  return PyramidQuadruple::create(s[0], s[2], s[1], s[3]);
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("adjacent pair classification") {
  using coxpyr::adjacent_pair_flavor;
  CHECK(adjacent_pair_flavor(2, 2) == PairFlavor::material);
  CHECK(adjacent_pair_flavor(2, 6) == PairFlavor::material);
  CHECK(adjacent_pair_flavor(2, 100) == PairFlavor::material);
  CHECK(adjacent_pair_flavor(3, 3) == PairFlavor::material);
  CHECK(adjacent_pair_flavor(3, 6) == PairFlavor::ideal);
  CHECK(adjacent_pair_flavor(6, 3) == PairFlavor::ideal);
  CHECK(adjacent_pair_flavor(4, 4) == PairFlavor::ideal);
  CHECK(adjacent_pair_flavor(3, 7) == PairFlavor::excluded);
  CHECK(adjacent_pair_flavor(4, 5) == PairFlavor::excluded);
  CHECK(adjacent_pair_flavor(6, 6) == PairFlavor::excluded);
  CHECK_THROWS_AS(adjacent_pair_flavor(1, 3), std::invalid_argument);

  // the integer test must match the floating angle sum test
  for (int a = 2; a <= 40; ++a) {
    for (int b = 2; b <= 40; ++b) {
      double s = std::cos(M_PI / a) * std::cos(M_PI / a) +
                 std::cos(M_PI / b) * std::cos(M_PI / b);
      PairFlavor expected = std::abs(s - 1.0) < 1e-9
                                ? PairFlavor::ideal
                                : (s < 1.0 ? PairFlavor::material : PairFlavor::excluded);
      CHECK(adjacent_pair_flavor(a, b) == expected);
    }
  }
}

TEST_CASE("quadruple validation") {
  CHECK_NOTHROW(PyramidQuadruple::create(2, 3, 2, 3));
  CHECK_NOTHROW(PyramidQuadruple::create(4, 2, 3, 3));  // valid but not canonical

  CHECK_THROWS_AS(PyramidQuadruple::create(1, 3, 2, 3), std::domain_error);
  CHECK_THROWS_AS(PyramidQuadruple::create(2, 4, 2, 5), std::domain_error);
  CHECK_THROWS_AS(PyramidQuadruple::create(2, 2, 3, 3), std::domain_error);
  CHECK_THROWS_AS(PyramidQuadruple::create(3, 3, 2, 2), std::domain_error);

  // the message pins down which constraint failed
  auto pair_msg = message_of([] { PyramidQuadruple::create(2, 4, 2, 5); });
  CHECK(pair_msg.find("(l,n)") != std::string::npos);
  CHECK(pair_msg.find("(4,5)") != std::string::npos);
  auto degen_msg = message_of([] { PyramidQuadruple::create(2, 2, 3, 3); });
  CHECK(degen_msg.find("k = l = 2") != std::string::npos);
}

TEST_CASE("parsing") {
  CHECK(PyramidQuadruple::parse("2,3,2,3") == PyramidQuadruple::create(2, 3, 2, 3));
  CHECK(PyramidQuadruple::parse(" 2, 3 ,2,3 ") == PyramidQuadruple::create(2, 3, 2, 3));
  CHECK_THROWS_AS(PyramidQuadruple::parse("2,3,2"), std::invalid_argument);
  CHECK_THROWS_AS(PyramidQuadruple::parse("2,3,2,x"), std::invalid_argument);
  CHECK_THROWS_AS(PyramidQuadruple::parse("2,3,2,3,4"), std::invalid_argument);
  CHECK_THROWS_AS(PyramidQuadruple::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PyramidQuadruple::parse("2,4,2,5"), std::domain_error);
}

TEST_CASE("accessors and ordering") {
  auto q = PyramidQuadruple::create(2, 5, 3, 3);
  CHECK(q.k() == 2);
  CHECK(q.l() == 5);
  CHECK(q.m() == 3);
  CHECK(q.n() == 3);
  CHECK(q.labels() == std::array<int, 4>{2, 5, 3, 3});
  CHECK(q.side_sequence() == std::array<int, 4>{2, 3, 5, 3});
  CHECK(q.to_string() == "2,5,3,3");
  CHECK(PyramidQuadruple::create(2, 3, 2, 4) < PyramidQuadruple::create(2, 3, 3, 3));
}

TEST_CASE("dihedral images act on the side cycle") {
  std::array<int, 4> sides = {2, 3, 5, 3};
  auto images = coxpyr::dihedral_images(sides);
  CHECK(images.size() == 8);

  std::set<std::array<int, 4>> set(images.begin(), images.end());
  CHECK(set.count(sides) == 1);
  CHECK(set.count({3, 5, 3, 2}) == 1);  // rotation
  CHECK(set.count({3, 5, 3, 2}) == 1);
  CHECK(set.count({3, 2, 3, 5}) == 1);  // reversal starts from the same cycle

  // closure: the image set of any image is the same set
  for (const auto& img : images) {
    auto second = coxpyr::dihedral_images(img);
    CHECK(std::set<std::array<int, 4>>(second.begin(), second.end()) == set);
  }
}

TEST_CASE("canonical form") {
  CHECK(coxpyr::canonicalize(4, 2, 3, 3) == PyramidQuadruple::create(2, 4, 3, 3));
  CHECK(coxpyr::canonicalize(3, 3, 4, 3) == PyramidQuadruple::create(3, 3, 3, 4));
  CHECK(coxpyr::canonicalize(3, 2, 3, 2) == PyramidQuadruple::create(2, 3, 2, 3));
  CHECK_THROWS_AS(coxpyr::canonicalize(2, 4, 2, 5), std::domain_error);

  // canonical quadruples are fixed points, and every dihedral relabeling
  // of one lands back on it
  for (const auto& q : coxpyr::enumerate_pyramids()) {
    CHECK(q.is_canonical());
    auto labels = q.labels();
    CHECK(coxpyr::canonicalize(labels[0], labels[1], labels[2], labels[3]) == q);
    for (const auto& sides : coxpyr::dihedral_images(q.side_sequence())) {
      PyramidQuadruple image = quad_of_sides(sides);
      auto il = image.labels();
      CHECK(coxpyr::canonicalize(il[0], il[1], il[2], il[3]) == q);
    }
  }

  CHECK_FALSE(PyramidQuadruple::create(3, 2, 3, 2).is_canonical());
  CHECK_FALSE(PyramidQuadruple::create(4, 2, 3, 3).is_canonical());
}

TEST_CASE("every valid labeling canonicalizes uniquely") {
  // sweep the whole (bounded) label box; canonicalize must accept exactly
  // the valid combinations and produce a canonical representative
  int valid = 0;
  for (int k = 2; k <= 6; ++k)
    for (int l = 2; l <= 6; ++l)
      for (int m = 2; m <= 6; ++m)
        for (int n = 2; n <= 6; ++n) {
          bool ok = coxpyr::adjacent_pair_ok(k, m) && coxpyr::adjacent_pair_ok(m, l) &&
                    coxpyr::adjacent_pair_ok(l, n) && coxpyr::adjacent_pair_ok(n, k) &&
                    !(k == 2 && l == 2) && !(m == 2 && n == 2);
          if (!ok) {
            CHECK_THROWS_AS(coxpyr::canonicalize(k, l, m, n), std::domain_error);
            continue;
          }
          ++valid;
          auto c = coxpyr::canonicalize(k, l, m, n);
          CHECK(c.is_canonical());
        }
  CHECK(valid > 33);  // the orbits collapse a strictly larger raw set
}

TEST_CASE("enumeration reproduces the catalogue") {
  auto quads = coxpyr::enumerate_pyramids();
  const auto& golden = coxpyr_golden::golden_rows();
  REQUIRE(quads.size() == golden.size());
  for (std::size_t i = 0; i < quads.size(); ++i) {
    CHECK(quads[i].labels() ==
          std::array<int, 4>{golden[i].quad[0], golden[i].quad[1], golden[i].quad[2],
                             golden[i].quad[3]});
    if (i) CHECK(quads[i - 1] < quads[i]);
  }
}

TEST_CASE("projected link rectangles") {
  auto link = coxpyr::projected_link(PyramidQuadruple::create(2, 3, 2, 3));
  CHECK(link.x_min == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(link.x_max == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(link.y_min == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(link.y_max == doctest::Approx(0.5).epsilon(1e-12));

  for (const auto& q : coxpyr::enumerate_pyramids()) {
    auto l = coxpyr::projected_link(q);
    CHECK(l.x_min < l.x_max);
    CHECK(l.y_min < l.y_max);
    CHECK(l.x_min <= 0.0);
    CHECK(l.y_min <= 0.0);

    CHECK(l.corners[0].edge == "AB");
    CHECK(l.corners[1].edge == "BC");
    CHECK(l.corners[2].edge == "CD");
    CHECK(l.corners[3].edge == "DA");
    CHECK(l.corners[0].labels == std::array<int, 2>{q.k(), q.m()});
    CHECK(l.corners[1].labels == std::array<int, 2>{q.m(), q.l()});
    CHECK(l.corners[2].labels == std::array<int, 2>{q.l(), q.n()});
    CHECK(l.corners[3].labels == std::array<int, 2>{q.n(), q.k()});

    for (const auto& c : l.corners) {
      double r2 = c.x * c.x + c.y * c.y;
      // inside the closed unit disk, touching the circle exactly at the
      // ideal corners
      CHECK(r2 <= 1.0 + 1e-12);
      CHECK((c.flavor == PairFlavor::ideal) == (std::abs(r2 - 1.0) < 1e-9));
      CHECK(c.flavor ==
            coxpyr::adjacent_pair_flavor(c.labels[0], c.labels[1]));
    }
  }
}
