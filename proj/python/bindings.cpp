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

#include "coxpyr/report_io.hpp"
#include "coxpyr/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using namespace coxpyr;

std::tuple<int, int, int, int> as_tuple(const PyramidQuadruple& q) {
  return {q.k(), q.l(), q.m(), q.n()};
}

std::vector<long long> as_int_list(const IntPolynomial& p) {
  std::vector<long long> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    out.push_back(c.convert_to<long long>());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hyperbolic Coxeter pyramids: enumeration, growth rates, volumes, inclusion order";
  m.attr("__version__") = kVersion;

  m.def(
      "enumerate_pyramids",
      [] {
        std::vector<std::tuple<int, int, int, int>> out;
        for (const auto& q : enumerate_pyramids()) {
          out.push_back(as_tuple(q));
        }
        return out;
      },
      "All canonical pyramid label quadruples, sorted");

  m.def(
      "canonicalize",
      [](int k, int l, int m_, int n) { return as_tuple(canonicalize(k, l, m_, n)); },
      "Canonical representative of the relabeling orbit of (k, l, m, n)", py::arg("k"),
      py::arg("l"), py::arg("m"), py::arg("n"));

  m.def(
      "growth_rate",
      [](int k, int l, int m_, int n) {
        return compute_growth(PyramidQuadruple::create(k, l, m_, n)).rate.tau;
      },
      "Growth rate of the pyramid reflection group", py::arg("k"), py::arg("l"), py::arg("m"),
      py::arg("n"));

  m.def(
      "denominator",
      [](int k, int l, int m_, int n) {
        return as_int_list(compute_growth(PyramidQuadruple::create(k, l, m_, n)).growth.den());
      },
      "Ascending coefficients of the growth function denominator", py::arg("k"), py::arg("l"),
      py::arg("m"), py::arg("n"));

  m.def(
      "perron_power",
      [](int k, int l, int m_, int n) {
        return compute_growth(PyramidQuadruple::create(k, l, m_, n)).perron.power;
      },
      "Smallest power of (t + 1) making the certificate coefficients non-negative", py::arg("k"),
      py::arg("l"), py::arg("m"), py::arg("n"));

  m.def(
      "volume",
      [](int k, int l, int m_, int n) {
        return pyramid_volume(PyramidQuadruple::create(k, l, m_, n)).total;
      },
      "Hyperbolic volume of the pyramid", py::arg("k"), py::arg("l"), py::arg("m"), py::arg("n"));

  m.def("lobachevsky", [](double theta) { return lobachevsky(theta); },
        "The Lobachevsky function", py::arg("theta"));

  m.def(
      "growth_report",
      [](int k, int l, int m_, int n) {
        return growth_json(compute_growth(PyramidQuadruple::create(k, l, m_, n))).dump();
      },
      "Full growth pipeline result as a JSON string", py::arg("k"), py::arg("l"), py::arg("m"),
      py::arg("n"));

  m.def(
      "volume_report",
      [](int k, int l, int m_, int n, bool oracle) {
        const PyramidQuadruple q = PyramidQuadruple::create(k, l, m_, n);
        std::optional<double> check;
        if (oracle) {
          check = volume_quadrature_oracle(q, 1e-6);
        }
        return volume_json(pyramid_volume(q), check).dump();
      },
      "Volume decomposition as a JSON string", py::arg("k"), py::arg("l"), py::arg("m"),
      py::arg("n"), py::arg("oracle") = false);

  m.def(
      "order_report",
      [] {
        const OrderRelation order = build_order();
        std::vector<double> rates;
        for (const auto& q : order.nodes) {
          rates.push_back(compute_growth(q).rate.tau);
        }
        return order_json(order, rates).dump();
      },
      "Inclusion order of all pyramids as a JSON string");

  m.def(
      "order_dot",
      [] {
        const OrderRelation order = build_order();
        std::vector<double> rates;
        for (const auto& q : order.nodes) {
          rates.push_back(compute_growth(q).rate.tau);
        }
        return order_dot(order, rates);
      },
      "Hasse diagram of the inclusion order in Graphviz format");
}
