// Copyright 2026 The qgamble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgamble/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "qgamble/correlation.hpp"

namespace qgamble {

namespace {

constexpr double kDensityXiMin = -8.0;
constexpr double kDensityXiMax = 8.0;
constexpr double kEigenXiMin = 0.01;
constexpr double kEigenXiMax = 8.0;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GameSpace make_gamespace(const RunConfig& c, int rounds) {
  return GameSpace(rounds, c.mode, c.kappa1, c.kappa2);
}

Json base_config(const RunConfig& c) {
  Json j = Json::object();
  j["subcommand"] = c.subcommand;
  return j;
}

Json game_config(const RunConfig& c) {
  Json j = base_config(c);
  j["rounds"] = c.rounds;
  j["mode"] = std::string(to_string(c.mode));
  j["kappa1"] = c.kappa1;
  j["kappa2"] = c.kappa2;
  return j;
}

Json grid_config(const RunConfig& c, double lo, double hi) {
  Json j = base_config(c);
  j["n"] = c.n;
  j["xi_min"] = lo;
  j["xi_max"] = hi;
  j["samples"] = c.samples;
  return j;
}

std::string render(const RunConfig& c, const Report& report) {
  return c.format == "json" ? write_json(report) : write_csv(report.table);
}

std::string pn_label(int n) { return "P_" + std::to_string(n) + "(xi)"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << text;
  os.close();
  if (!os) throw IoError("failed writing '" + path + "'");
}

RunOutput run_game_subcommand(const RunConfig& c) {
  Report report;
  report.config = game_config(c);
  if (c.subcommand == "operators") {
    const GameSpace gs = make_gamespace(c, c.rounds);
    report.table = operator_table(build_operators(gs));
    report.audit = audit_json(audit_commutators(gs));
  } else if (c.subcommand == "audit") {
    const auto audit = audit_commutators(make_gamespace(c, c.rounds));
    report.table = audit_table(audit);
    report.audit = audit_json(audit);
  } else if (c.subcommand == "spectrum") {
    report.table = spectrum_table(correlation_spectrum(make_gamespace(c, c.rounds)));
  } else {  // sweep
    report.config.erase("rounds");
    report.config["rounds_max"] = c.rounds;
    if (c.rounds < 1) throw InvalidInput("sweep: --rounds-max must be at least 1");
    Table& t = report.table;
    t.header = {"rounds_max"};
    for (int rounds = 1; rounds <= c.rounds; ++rounds) {
      const Table block = spectrum_table(correlation_spectrum(make_gamespace(c, rounds)));
      if (rounds == 1) t.header.insert(t.header.end(), block.header.begin(), block.header.end());
      for (const auto& row : block.rows) {
        std::vector<Cell> full{std::int64_t{rounds}};
        full.insert(full.end(), row.begin(), row.end());
        t.rows.push_back(std::move(full));
      }
    }
  }
  return {render(c, report), std::nullopt};
}

RunOutput run_wave_subcommand(const RunConfig& c) {
  Report report;
  std::optional<std::string> svg;
  const double lo = c.xi_min.value_or(kDensityXiMin);
  const double hi = c.xi_max.value_or(kDensityXiMax);

  if (c.subcommand == "density") {
    report.config = grid_config(c, lo, hi);
    const auto grid = density_grid(c.n, lo, hi, c.samples);
    report.table = density_table(grid);
    if (!c.svg_path.empty()) {
      svg = render_svg({"Pay-off density after " + std::to_string(c.n) + " rounds", "xi",
                        "density", {{pn_label(c.n), grid.xi, grid.density}}, {}});
    }
  } else if (c.subcommand == "peaks") {
    report.config = base_config(c);
    report.config["n"] = c.n;
    report.table = peaks_table(density_peaks(c.n));
  } else if (c.subcommand == "classical") {
    report.config = grid_config(c, lo, hi);
    const auto xi = linspace(lo, hi, c.samples);
    const auto classical = classical_mixture_density(c.n, xi);
    const auto quantum = density_grid(c.n, lo, hi, c.samples).density;
    report.table = classical_table(xi, classical, quantum);
    if (!c.svg_path.empty()) {
      svg = render_svg({"Quantum vs classical pay-off density, n = " + std::to_string(c.n), "xi",
                        "density",
                        {{pn_label(c.n), xi, quantum}, {"classical random walk", xi, classical}},
                        {}});
    }
  } else {  // compare
    report.config = base_config(c);
    report.config["n"] = c.n;
    const auto cmp = compare_quantum_classical(c.n);
    report.table = comparison_table(cmp);
    if (!c.svg_path.empty()) {
      const double half = std::max(std::sqrt(2.0 * c.n + 1.0), double(c.n)) + 3.0;
      const auto xi = linspace(-half, half, 1601);
      std::vector<double> quantum;
      quantum.reserve(xi.size());
      for (double x : xi) quantum.push_back(std::pow(psi(c.n, x), 2));
      PlotSpec plot{"Density maxima, n = " + std::to_string(c.n),
                    "xi",
                    "density",
                    {{pn_label(c.n), xi, quantum},
                     {"classical random walk", xi, classical_mixture_density(c.n, xi)}},
                    {}};
      for (double x : cmp.classical_centers) plot.markers.push_back({x, "classical"});
      for (double x : cmp.quantum_maxima) plot.markers.push_back({x, "quantum"});
      svg = render_svg(plot);
    }
  }
  return {render(c, report), std::move(svg)};
}

RunOutput run_correlation_wave_subcommand(const RunConfig& c) {
  Report report;
  report.config = base_config(c);
  if (c.subcommand == "corr-eigen") {
    const double lo = c.xi_min.value_or(kEigenXiMin);
    const double hi = c.xi_max.value_or(kEigenXiMax);
    if (!(lo > 0.0)) throw InvalidInput("corr-eigen: --xi-min must be positive");
    report.config["lambda"] = c.lambda;
    report.config["ordering"] = std::string(to_string(c.ordering));
    report.config["xi_min"] = lo;
    report.config["xi_max"] = hi;
    report.config["samples"] = c.samples;
    const auto fn = correlation_eigenfunction(c.lambda, c.ordering, linspace(lo, hi, c.samples));
    report.table = eigenfunction_table(fn);
    report.audit = eigenfunction_json(fn);
  } else {  // diverge
    report.config["kind"] = std::string(to_string(c.kind));
    report.config["cutoffs"] = c.cutoffs;
    const auto scan = divergence_scan(c.kind, c.cutoffs);
    report.table = divergence_table(scan);
    report.audit = divergence_json(scan);
  }
  return {render(c, report), std::nullopt};
}

}  // namespace

RunOutput execute(const RunConfig& c) {
  const auto& s = c.subcommand;
  if (s == "operators" || s == "audit" || s == "spectrum" || s == "sweep") {
    return run_game_subcommand(c);
  }
  if (s == "variance") {
    Report report;
    report.config = game_config(c);
    report.config["n"] = c.n;
    report.config["player"] = c.player;
    const GameSpace gs = make_gamespace(c, c.rounds);
    const Player player = c.player == 2 ? Player::Two : Player::One;
    report.table = variance_table(gs, payoff_variance(gs, c.n, player));
    return {render(c, report), std::nullopt};
  }
  if (s == "density" || s == "peaks" || s == "classical" || s == "compare") {
    return run_wave_subcommand(c);
  }
  if (s == "corr-eigen" || s == "diverge") return run_correlation_wave_subcommand(c);
  throw InvalidInput("unknown subcommand '" + s + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string mode = "finite", ordering = "weyl", kind;

  CLI::App app{"Two-player quantum gambling game: operators, correlation spectra, pay-off densities",
               "qgamble"};
  app.require_subcommand(1);

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", config.out_path, "Write results to PATH instead of stdout");
  };
  const auto add_kappas = [&](CLI::App* sub) {
    sub->add_option("--kappa1", config.kappa1, "Pay-off unit of player 1")
        ->check(CLI::PositiveNumber);
    sub->add_option("--kappa2", config.kappa2, "Pay-off unit of player 2")
        ->check(CLI::PositiveNumber);
  };
  const auto add_game = [&](CLI::App* sub, const std::string& rounds_flag) {
    sub->add_option(rounds_flag, config.rounds, "Maximum round index N")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--mode", mode, "Boundary mode")->check(CLI::IsMember({"finite", "periodic"}));
    add_kappas(sub);
    add_output(sub);
  };
  const auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Round index")->required()->check(CLI::NonNegativeNumber);
  };
  const auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--xi-min", config.xi_min, "Lower grid bound");
    sub->add_option("--xi-max", config.xi_max, "Upper grid bound");
    sub->add_option("--samples", config.samples, "Grid samples")->check(CLI::Range(2, 10000000));
  };

  add_game(app.add_subcommand("operators", "Dump ladder, number, pay-off and pre-correlation matrices"),
           "--rounds");
  add_game(app.add_subcommand("audit", "Commutator audit against the boundary patterns"), "--rounds");
  add_game(app.add_subcommand("spectrum", "Pre-correlation spectrum and correlation report"),
           "--rounds");
  add_game(app.add_subcommand("sweep", "Spectrum for N = 1 .. rounds-max"), "--rounds-max");

  auto* variance = app.add_subcommand("variance", "Pay-off mean square in a number state");
  variance->add_option("--rounds", config.rounds, "Maximum round index N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_n(variance);
  variance->add_option("--player", config.player, "Player")->required()->check(CLI::IsMember({1, 2}));
  variance->add_option("--mode", mode, "Boundary mode")->check(CLI::IsMember({"finite", "periodic"}));
  add_kappas(variance);
  add_output(variance);

  auto* density = app.add_subcommand("density", "Hermite wave function and pay-off density on a grid");
  add_n(density);
  add_grid(density);
  density->add_option("--svg", config.svg_path, "Also write an SVG plot");
  add_output(density);

  auto* peaks = app.add_subcommand("peaks", "Locations of the density maxima");
  add_n(peaks);
  add_output(peaks);

  auto* classical = app.add_subcommand("classical", "Classical random-walk density next to P_n");
  add_n(classical);
  add_grid(classical);
  classical->add_option("--svg", config.svg_path, "Also write an SVG plot");
  add_output(classical);

  auto* compare = app.add_subcommand("compare", "Quantum peaks, dips and variances vs the classical walk");
  add_n(compare);
  compare->add_option("--svg", config.svg_path, "Also write an SVG plot");
  add_output(compare);

  auto* corr = app.add_subcommand("corr-eigen", "Scaling eigenfunction of the correlation operator");
  corr->add_option("--lambda", config.lambda, "Correlation eigenvalue in units of kappa1*kappa2")
      ->required();
  corr->add_option("--ordering", ordering, "Operator ordering")
      ->check(CLI::IsMember({"printed", "weyl"}));
  add_grid(corr);
  add_output(corr);

  auto* diverge = app.add_subcommand("diverge", "Cutoff dependence of norm integrals");
  diverge->add_option("--kind", kind, "State family")
      ->required()
      ->check(CLI::IsMember({"plane", "printed", "weyl"}));
  diverge->add_option("--cutoffs", config.cutoffs, "Comma-separated cutoffs")
      ->required()
      ->delimiter(',');
  add_output(diverge);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qgamble: " << e.what() << "\n";
    return kExitUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.mode = parse_boundary_mode(mode);
  config.ordering = parse_ordering(ordering);
  if (!kind.empty()) config.kind = parse_divergence_kind(kind);

  try {
    const RunOutput result = execute(config);
    if (config.out_path.empty()) {
      out << result.document;
    } else {
      write_file(config.out_path, result.document);
      err << "qgamble: wrote " << config.out_path << "\n";
    }
    if (result.svg) {
      write_file(config.svg_path, *result.svg);
      err << "qgamble: wrote " << config.svg_path << "\n";
    }
  } catch (const InvalidInput& e) {
    err << "qgamble: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qgamble: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace qgamble
