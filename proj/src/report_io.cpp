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

#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace coxpyr {

namespace {

long long to_int64(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("coefficient does not fit in 64 bits");
  }
  return v.convert_to<long long>();
}

}  // namespace

std::string decimal_string(const BigRat& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) {
    return num.str() + "/" + den.str();
  }
  const int shift = std::max(twos, fives);
  BigInt scaled = num;
  for (int i = 0; i < shift - twos; ++i) {
    scaled *= 2;
  }
  for (int i = 0; i < shift - fives; ++i) {
    scaled *= 5;
  }
  const bool neg = scaled < 0;
  std::string digits = (neg ? BigInt(-scaled) : scaled).str();
  if (digits.size() <= static_cast<std::size_t>(shift)) {
    digits.insert(0, static_cast<std::size_t>(shift) + 1 - digits.size(), '0');
  }
  std::string out = neg ? "-" : "";
  out += digits.substr(0, digits.size() - shift);
  if (shift > 0) {
    std::string frac = digits.substr(digits.size() - shift);
    while (!frac.empty() && frac.back() == '0') {
      frac.pop_back();
    }
    if (!frac.empty()) {
      out += "." + frac;
    }
  }
  return out;
}

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

nlohmann::json quadruple_json(const PyramidQuadruple& q) {
  return nlohmann::json::array({q.k(), q.l(), q.m(), q.n()});
}

nlohmann::json coeff_json(const IntPolynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) {
    arr.push_back(to_int64(c));
  }
  return arr;
}

nlohmann::json diagram_json(const CoxeterDiagram& d) {
  auto edges = nlohmann::json::array();
  for (std::size_t i = 0; i < d.rank(); ++i) {
    for (std::size_t j = i + 1; j < d.rank(); ++j) {
      if (d.order(i, j) != 2) {
        edges.push_back(nlohmann::json::array({i, j, d.order(i, j)}));
      }
    }
  }
  return {{"generators", d.generators()}, {"edges", edges}};
}

nlohmann::json growth_json(const PyramidGrowth& g, std::optional<bool> numeric_check,
                           std::optional<std::size_t> series_depth) {
  nlohmann::json out{
      {"quadruple", quadruple_json(g.quadruple)},
      {"diagram", diagram_json(pyramid_diagram(g.quadruple))},
      {"growth_function",
       {{"numerator", coeff_json(g.growth.num())}, {"denominator", coeff_json(g.growth.den())}}},
      {"g", coeff_json(g.g)},
      {"perron",
       {{"power", g.perron.power},
        {"h", coeff_json(IntPolynomial(g.perron.h_coeffs))},
        {"support_gcd", g.perron.support_gcd}}},
      {"r1", {{"lo", decimal_string(g.rate.lo)}, {"hi", decimal_string(g.rate.hi)}}},
      {"tau", {{"value", g.rate.tau}, {"error_bound", g.rate.tau_error}}},
  };
  if (numeric_check) {
    out["numeric_root_check"] = *numeric_check;
  }
  if (series_depth) {
    out["series_check"] = {{"depth", *series_depth}, {"ok", true}};
  }
  return out;
}

nlohmann::json volume_json(const PyramidVolume& v, std::optional<double> oracle) {
  auto pieces = nlohmann::json::array();
  for (const auto& piece : v.pieces) {
    pieces.push_back({{"corner", piece.corner},
                      {"sign", piece.sign},
                      {"a", piece.a},
                      {"b", piece.b},
                      {"volume", piece.volume}});
  }
  nlohmann::json out{
      {"quadruple", quadruple_json(v.quadruple)}, {"pieces", pieces}, {"total", v.total}};
  if (oracle) {
    out["oracle"] = *oracle;
  }
  return out;
}

nlohmann::json order_json(const OrderRelation& order, const std::vector<double>& rates) {
  auto nodes = nlohmann::json::array();
  for (const auto& q : order.nodes) {
    nodes.push_back(quadruple_json(q));
  }
  auto pair_array = [](const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    auto arr = nlohmann::json::array();
    for (const auto& [i, j] : pairs) {
      arr.push_back(nlohmann::json::array({i, j}));
    }
    return arr;
  };
  nlohmann::json out{{"nodes", nodes},
                     {"pairs", pair_array(order.pairs)},
                     {"hasse_edges", pair_array(order.hasse_edges)}};
  if (!rates.empty()) {
    out["growth_rates"] = rates;
  }
  return out;
}

std::string order_dot(const OrderRelation& order, const std::vector<double>& rates) {
  std::ostringstream out;
  out << "digraph pyramid_order {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < order.nodes.size(); ++i) {
    out << "  q" << i << " [label=\"(" << order.nodes[i].to_string() << ")";
    if (i < rates.size()) {
      out << "\\n\xcf\x84=" << format_double(rates[i], 6);
    }
    out << "\"];\n";
  }
  for (const auto& [i, j] : order.hasse_edges) {
    out << "  q" << i << " -> q" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::string denominator_string(const IntPolynomial& g) {
  return "(t - 1) * (" + g.to_string() + ")";
}

}  // namespace

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "k,l,m,n,growth_rate,volume,perron_j,denominator\n";
  for (const auto& row : rows) {
    out << row.quadruple.to_string() << "," << format_double(row.growth_rate) << ","
        << format_double(row.volume) << "," << row.perron_power << ",\""
        << denominator_string(row.g) << "\"\n";
  }
  return out.str();
}

std::string report_text(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "quadruple     growth_rate    volume         j  denominator\n";
  for (const auto& row : rows) {
    char line[128];
    std::snprintf(line, sizeof(line), "(%s)%*s", row.quadruple.to_string().c_str(),
                  static_cast<int>(12 - row.quadruple.to_string().size()), "");
    out << line << format_double(row.growth_rate) << "    " << format_double(row.volume) << "    "
        << row.perron_power << "  " << denominator_string(row.g) << "\n";
  }
  return out.str();
}

nlohmann::json report_json(const std::vector<ReportRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& row : rows) {
    arr.push_back({{"quadruple", quadruple_json(row.quadruple)},
                   {"growth_rate", row.growth_rate},
                   {"volume", row.volume},
                   {"perron_power", row.perron_power},
                   {"g", coeff_json(row.g)},
                   {"denominator", coeff_json(row.g * IntPolynomial{-1, 1})}});
  }
  return {{"rows", arr}};
}

std::string enumerate_text(const std::vector<PyramidQuadruple>& quads) {
  std::ostringstream out;
  for (const auto& q : quads) {
    out << q.to_string() << "\n";
  }
  return out.str();
}

std::string enumerate_csv(const std::vector<PyramidQuadruple>& quads) {
  return "k,l,m,n\n" + enumerate_text(quads);
}

nlohmann::json enumerate_json(const std::vector<PyramidQuadruple>& quads) {
  auto arr = nlohmann::json::array();
  for (const auto& q : quads) {
    arr.push_back(quadruple_json(q));
  }
  return {{"count", quads.size()}, {"quadruples", arr}};
}

}  // namespace coxpyr
