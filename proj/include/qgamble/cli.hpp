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

#ifndef QGAMBLE_CLI_HPP
#define QGAMBLE_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qgamble/gamespace.hpp"
#include "qgamble/report.hpp"
#include "qgamble/roundwaves.hpp"
#include "qgamble/svg.hpp"

namespace qgamble {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

// Everything a run depends on.  Two equal configs produce identical bytes.
struct RunConfig {
  std::string subcommand;
  int rounds = 0;  // N, or the sweep upper bound
  int n = 0;
  int player = 1;
  BoundaryMode mode = BoundaryMode::Finite;
  double kappa1 = 1.0;
  double kappa2 = 1.0;
  // Unset grid bounds resolve per subcommand: ±8 for densities, [0.01, 8]
  // for correlation eigenfunctions, which live on ξ > 0.
  std::optional<double> xi_min;
  std::optional<double> xi_max;
  std::size_t samples = 1601;
  double lambda = 0.0;
  Ordering ordering = Ordering::Weyl;
  DivergenceKind kind = DivergenceKind::CorrWeyl;
  std::vector<double> cutoffs;
  std::string format = "csv";
  std::string out_path;
  std::string svg_path;
};

struct RunOutput {
  std::string document;             // CSV or JSON
  std::optional<std::string> svg;   // when the subcommand plots and --svg was given
};

/// Computes the report for a parsed configuration without touching the
/// filesystem.
RunOutput execute(const RunConfig& config);

/// Parses `args` (without the program name), runs, and writes results to
/// `out` or to --out / --svg files.  Diagnostics go to `err`.
/// Returns 0 on success, 2 on usage errors, 1 on numerical or I/O errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgamble

#endif  // QGAMBLE_CLI_HPP
