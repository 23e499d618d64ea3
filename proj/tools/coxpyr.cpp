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

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using namespace coxpyr;

struct Options {
  std::string format;
  std::string output;
  std::string quad;
  int root_eps_bits = 40;
  double lob_eps = 1e-12;
  int series_depth = 30;
  bool verify_numeric = false;
  bool oracle = false;
};

void write_out(const Options& opts, const std::string& payload) {
  if (opts.output.empty() || opts.output == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream file(opts.output, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file " + opts.output);
  }
  file << payload;
}

std::string dump(const nlohmann::json& j) {
  return j.dump(2) + "\n";
}

void check_series(const PyramidGrowth& g, std::size_t depth) {
  const auto a = series_coefficients(g.growth, depth);
  if (a.empty() || a[0] != 1 || (a.size() > 1 && a[1] != 5)) {
    throw std::runtime_error("series check failed: expected a0 = 1, a1 = 5");
  }
  for (const auto& c : a) {
    if (c < 0) {
      throw std::runtime_error("series check failed: negative coefficient");
    }
  }
}

int run_enumerate(const Options& opts) {
  const auto quads = enumerate_pyramids();
  if (opts.format == "json") {
    write_out(opts, dump(enumerate_json(quads)));
  } else if (opts.format == "csv") {
    write_out(opts, enumerate_csv(quads));
  } else {
    write_out(opts, enumerate_text(quads));
  }
  return 0;
}

std::string growth_text(const PyramidGrowth& g, std::optional<bool> numeric) {
  std::ostringstream out;
  out << "quadruple: (" << g.quadruple.to_string() << ")\n"
      << "growth function: " << g.growth.to_string() << "\n"
      << "denominator: (t - 1) * (" << g.g.to_string() << ")\n"
      << "perron: power " << g.perron.power << ", support gcd " << g.perron.support_gcd << "\n"
      << "r1 in [" << decimal_string(g.rate.lo) << ", " << decimal_string(g.rate.hi) << "]\n"
      << "growth rate: " << format_double(g.rate.tau, 12) << " (error bound "
      << format_double(g.rate.tau_error, 3) << ")\n";
  if (numeric) {
    out << "numeric root check: " << (*numeric ? "passed" : "failed") << "\n";
  }
  return out.str();
}

int run_growth(const Options& opts, bool perron_only) {
  const PyramidQuadruple q = PyramidQuadruple::parse(opts.quad);
  const PyramidGrowth g = compute_growth(q, {opts.root_eps_bits, 5});
  std::optional<bool> numeric;
  if (opts.verify_numeric) {
    numeric = numeric_root_check(g.g, 1.0 / g.rate.tau);
    if (!*numeric) {
      throw std::runtime_error("numeric root check failed for (" + q.to_string() + ")");
    }
  }
  std::optional<std::size_t> series;
  if (!perron_only && opts.series_depth > 0) {
    check_series(g, static_cast<std::size_t>(opts.series_depth));
    series = static_cast<std::size_t>(opts.series_depth);
  }
  if (perron_only) {
    if (opts.format == "text") {
      std::ostringstream out;
      out << "quadruple: (" << g.quadruple.to_string() << ")\n"
          << "g: " << g.g.to_string() << "\n"
          << "power: " << g.perron.power << "\n"
          << "h: " << IntPolynomial(g.perron.h_coeffs).to_string() << "\n"
          << "support gcd: " << g.perron.support_gcd << "\n";
      write_out(opts, out.str());
    } else {
      write_out(opts, dump(nlohmann::json{{"quadruple", quadruple_json(q)},
                                          {"g", coeff_json(g.g)},
                                          {"perron",
                                           {{"power", g.perron.power},
                                            {"h", coeff_json(IntPolynomial(g.perron.h_coeffs))},
                                            {"support_gcd", g.perron.support_gcd}}}}));
    }
    return 0;
  }
  if (opts.format == "text") {
    write_out(opts, growth_text(g, numeric));
  } else {
    write_out(opts, dump(growth_json(g, numeric, series)));
  }
  return 0;
}

int run_volume(const Options& opts) {
  const PyramidQuadruple q = PyramidQuadruple::parse(opts.quad);
  const PyramidVolume v = pyramid_volume(q, opts.lob_eps);
  std::optional<double> oracle;
  if (opts.oracle) {
    oracle = volume_quadrature_oracle(q, 1e-6);
  }
  if (opts.format == "text") {
    std::ostringstream out;
    out << "quadruple: (" << q.to_string() << ")\n";
    for (const auto& piece : v.pieces) {
      out << "piece " << piece.corner << ": sign " << piece.sign << ", corner ("
          << format_double(piece.a, 6) << ", " << format_double(piece.b, 6) << "), volume "
          << format_double(piece.volume, 10) << "\n";
    }
    out << "total: " << format_double(v.total, 10) << "\n";
    if (oracle) {
      out << "oracle: " << format_double(*oracle, 10) << "\n";
    }
    write_out(opts, out.str());
  } else {
    write_out(opts, dump(volume_json(v, oracle)));
  }
  return 0;
}

int run_order(const Options& opts) {
  const OrderRelation order = build_order();
  std::vector<double> rates;
  rates.reserve(order.nodes.size());
  for (const auto& q : order.nodes) {
    rates.push_back(compute_growth(q, {opts.root_eps_bits, 5}).rate.tau);
  }
  const MonotonicityReport mono = monotonicity_report(order, rates);
  if (!mono.forward_violations.empty()) {
    throw std::runtime_error("order is not monotone in growth rate");
  }
  if (opts.format == "json") {
    nlohmann::json j = order_json(order, rates);
    auto exceptions = nlohmann::json::array();
    for (const auto& [i, j2] : mono.converse_exceptions) {
      exceptions.push_back(nlohmann::json::array({i, j2}));
    }
    j["converse_exceptions"] = exceptions;
    write_out(opts, dump(j));
  } else {
    write_out(opts, order_dot(order, rates));
  }
  return 0;
}

int run_report(const Options& opts) {
  const auto quads = enumerate_pyramids();
  std::vector<std::future<ReportRow>> futures;
  futures.reserve(quads.size());
  for (const auto& q : quads) {
    futures.push_back(std::async(std::launch::async, [&opts, q] {
      const PyramidGrowth g = compute_growth(q, {opts.root_eps_bits, 5});
      const PyramidVolume v = pyramid_volume(q, opts.lob_eps);
      return ReportRow{q, g.rate.tau, v.total, g.perron.power, g.g};
    }));
  }
  std::vector<ReportRow> rows;
  rows.reserve(quads.size());
  for (auto& f : futures) {
    rows.push_back(f.get());
  }
  if (opts.format == "json") {
    write_out(opts, dump(report_json(rows)));
  } else if (opts.format == "text") {
    write_out(opts, report_text(rows));
  } else {
    write_out(opts, report_csv(rows));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter pyramid growth rates, volumes and inclusion order"};
  app.set_version_flag("--version", std::string(coxpyr::kVersion));
  app.require_subcommand(1);
  // accept the global tuning options after the subcommand name as well
  app.fallthrough();

  Options opts;
  app.add_option("--root-eps-bits", opts.root_eps_bits, "Bisection precision in bits")
      ->check(CLI::Range(1, 4096));
  app.add_option("--lob-eps", opts.lob_eps, "Series tail bound for volume evaluation")
      ->check(CLI::Range(1e-15, 1.0));
  app.add_option("--series-check-depth", opts.series_depth,
                 "Growth series coefficients to validate (0 disables)")
      ->check(CLI::Range(0, 10000));

  auto* enumerate = app.add_subcommand("enumerate", "List all pyramid quadruples");
  enumerate->add_option("--format", opts.format, "text, csv or json (default text)")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* growth = app.add_subcommand("growth", "Growth function and rate of one pyramid");
  growth->add_option("quadruple", opts.quad, "Quadruple k,l,m,n")->required();
  growth->add_option("--format", opts.format, "json or text (default json)")
      ->check(CLI::IsMember({"json", "text"}));
  growth->add_flag("--verify-perron-numeric", opts.verify_numeric,
                   "Cross-check the dominant root numerically");

  auto* perron = app.add_subcommand("perron", "Perron certificate of one pyramid");
  perron->add_option("quadruple", opts.quad, "Quadruple k,l,m,n")->required();
  perron->add_option("--format", opts.format, "json or text (default json)")
      ->check(CLI::IsMember({"json", "text"}));

  auto* volume = app.add_subcommand("volume", "Hyperbolic volume of one pyramid");
  volume->add_option("quadruple", opts.quad, "Quadruple k,l,m,n")->required();
  volume->add_option("--format", opts.format, "json or text (default json)")
      ->check(CLI::IsMember({"json", "text"}));
  volume->add_flag("--oracle-volume", opts.oracle, "Also run the quadrature oracle");

  auto* order = app.add_subcommand("order", "Inclusion order of all pyramids");
  order->add_option("--format", opts.format, "dot or json (default dot)")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* report = app.add_subcommand("report", "Growth rate and volume table for all pyramids");
  report->add_option("--format", opts.format, "csv, json or text (default csv)")
      ->check(CLI::IsMember({"csv", "json", "text"}));

  for (auto* cmd : {enumerate, growth, perron, volume, order, report}) {
    cmd->add_option("--output,-o", opts.output, "Write to a file instead of stdout");
  }

  CLI11_PARSE(app, argc, argv);

  if (opts.format.empty()) {
    opts.format = app.got_subcommand(enumerate) ? "text"
                  : app.got_subcommand(order)   ? "dot"
                  : app.got_subcommand(report)  ? "csv"
                                                : "json";
  }

  try {
    if (app.got_subcommand(enumerate)) {
      return run_enumerate(opts);
    }
    if (app.got_subcommand(growth)) {
      return run_growth(opts, false);
    }
    if (app.got_subcommand(perron)) {
      return run_growth(opts, true);
    }
    if (app.got_subcommand(volume)) {
      return run_volume(opts);
    }
    if (app.got_subcommand(order)) {
      return run_order(opts);
    }
    return run_report(opts);
  } catch (const std::invalid_argument& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return 1;
  } catch (const std::domain_error& err) {
    std::cerr << "domain error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  }
}
