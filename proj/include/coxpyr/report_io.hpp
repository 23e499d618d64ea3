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

#ifndef COXPYR_REPORT_IO_HPP
#define COXPYR_REPORT_IO_HPP

#include "coxpyr/growth.hpp"
#include "coxpyr/order.hpp"
#include "coxpyr/volume.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace coxpyr {

/// Exact decimal expansion when the reduced denominator is 2^a 5^b
/// (always the case for bisection endpoints), "p/q" otherwise.
std::string decimal_string(const BigRat& r);

/// printf %.*g with the given number of significant digits.
std::string format_double(double x, int digits = 10);

nlohmann::json quadruple_json(const PyramidQuadruple& q);
nlohmann::json coeff_json(const IntPolynomial& p);

/// {"generators": [names], "edges": [[i, j, m], ...]} listing the pairs
/// with order differing from 2; m = 0 encodes infinity.
nlohmann::json diagram_json(const CoxeterDiagram& d);

nlohmann::json growth_json(const PyramidGrowth& g, std::optional<bool> numeric_check = {},
                           std::optional<std::size_t> series_depth = {});
nlohmann::json volume_json(const PyramidVolume& v, std::optional<double> oracle = {});
nlohmann::json order_json(const OrderRelation& order, const std::vector<double>& rates);

/// Graphviz rendering of the Hasse diagram, minimal elements at the bottom,
/// each node labeled "(k,l,m,n)" with its growth rate.
std::string order_dot(const OrderRelation& order, const std::vector<double>& rates);

/// One summary line per pyramid.
struct ReportRow {
  PyramidQuadruple quadruple;
  double growth_rate;
  double volume;
  int perron_power;
  IntPolynomial g;  // denominator = (t - 1) g
};

/// Column order: k,l,m,n,growth_rate,volume,perron_j,denominator.
std::string report_csv(const std::vector<ReportRow>& rows);
std::string report_text(const std::vector<ReportRow>& rows);
nlohmann::json report_json(const std::vector<ReportRow>& rows);

std::string enumerate_text(const std::vector<PyramidQuadruple>& quads);
std::string enumerate_csv(const std::vector<PyramidQuadruple>& quads);
nlohmann::json enumerate_json(const std::vector<PyramidQuadruple>& quads);

}  // namespace coxpyr

#endif  // COXPYR_REPORT_IO_HPP
