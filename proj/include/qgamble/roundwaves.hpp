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

// Wave-function picture of the game: pay-off densities after n rounds,
// their maxima, the classical random-walk reference, and the scaling
// eigenfunctions of the correlation operator.
//
// ξ is the dimensionless pay-off of player 2, π/√(κ₁κ₂).  With π₂ acting
// by multiplication and π₁ as the derivative, the number operator becomes
// −d²/dξ² + ξ² with eigenvalue 2n + 1, solved by Hermite functions.

#ifndef QGAMBLE_ROUNDWAVES_HPP
#define QGAMBLE_ROUNDWAVES_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qgamble/errors.hpp"

namespace qgamble {

inline constexpr int kMaxHermiteOrder = 300;
inline constexpr int kMaxPeakOrder = 100;
inline constexpr double kQuadratureStep = 1e-3;

/// Physicists' Hermite polynomial H_n(ξ) by forward recurrence.
double hermite(int n, double xi);

/// Normalized Hermite function (2ⁿ n! √π)^{−1/2} e^{−ξ²/2} H_n(ξ).
double psi(int n, double xi);

/// Half-width √(2n+1) + 6 of the window that holds all of P_n's mass.
double density_half_width(int n);

/// Composite trapezoid rule on uniformly spaced samples.
double trapezoid(std::span<const double> values, double step);

/// Evenly spaced samples from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t samples);

struct DensityGrid {
  int n = 0;
  std::vector<double> xi;
  std::vector<double> psi;
  std::vector<double> density;  // psi²
};

DensityGrid density_grid(int n, double xi_min, double xi_max, std::size_t samples);

/// The n simple zeros of H_n, ascending.
std::vector<double> hermite_zeros(int n);

struct PeakSet {
  int n = 0;
  std::vector<double> maxima;             // ascending, n + 1 entries
  std::vector<double> classical_centers;  // −n, −n+2, …, n
};

/// Local maxima of P_n: roots of 2n·H_{n−1}(ξ) − ξ·H_n(ξ).
PeakSet density_peaks(int n);

/// max over `grid` of |−D²_h f + ξ² f − energy·f| with D²_h the central
/// second difference.
template <typename Fn>
double schrodinger_residual(Fn&& fn, double energy, std::span<const double> grid, double h) {
  if (!(h > 0.0)) throw InvalidInput("schrodinger_residual: step must be positive");
  double worst = 0.0;
  for (double x : grid) {
    const double f0 = fn(x);
    const double d2 = (fn(x + h) - 2.0 * f0 + fn(x - h)) / (h * h);
    worst = std::max(worst, std::abs(-d2 + x * x * f0 - energy * f0));
  }
  return worst;
}

double schrodinger_residual(int n, std::span<const double> grid, double h);

// Binomial ±1 random walk over n rounds started from the zero-round
// Gaussian e^{−ξ²}/√π.
struct ClassicalMixture {
  int n = 0;
  std::vector<double> weights;  // 2⁻ⁿ C(n,k)
  std::vector<double> centers;  // n − 2k
  double width = 1.0 / std::sqrt(2.0);

  double operator()(double xi) const;
  double variance() const { return 0.5 + n; }
};

ClassicalMixture classical_mixture(int n);
std::vector<double> classical_mixture_density(int n, std::span<const double> grid);

struct ComparisonReport {
  int n = 0;
  std::vector<double> quantum_maxima;
  std::vector<double> classical_centers;
  double quantum_center_density = 0;    // P_n(0)
  double classical_center_density = 0;  // mixture at 0
  // For odd n both densities dip at ξ = 0; set to whether the quantum dip is deeper.
  std::optional<bool> quantum_minimum_deeper;
  double quantum_variance = 0;
  double classical_variance = 0;
  double outermost_quantum_peak = 0;
  double outermost_deviation = 0;  // n − outermost quantum peak
};

ComparisonReport compare_quantum_classical(int n);

enum class Ordering { Printed, Weyl };

std::string_view to_string(Ordering ordering);
Ordering parse_ordering(std::string_view text);

// Solution ξ^s of iκ₁κ₂(ξ d/dξ + c)Ψ = λΨ.  The printed ordering has c = 1,
// the Weyl-symmetrized ordering ½(ξp + pξ) has c = ½.
struct CorrelationEigenfunction {
  double lambda = 0;
  double kappa_product = 1;
  Ordering ordering = Ordering::Weyl;
  std::complex<double> exponent;
  std::vector<double> xi;
  std::vector<std::complex<double>> values;
  double ode_residual = 0;  // max |LΨ − λΨ| over the grid
  double max_abs = 0;
};

CorrelationEigenfunction correlation_eigenfunction(double lambda, Ordering ordering,
                                                   std::span<const double> grid,
                                                   double kappa_product = 1.0);

enum class DivergenceKind { PlaneWave, CorrPrinted, CorrWeyl };
enum class Growth { Linear, Logarithmic, Undetermined };

std::string_view to_string(DivergenceKind kind);
DivergenceKind parse_divergence_kind(std::string_view text);
std::string_view to_string(Growth growth);

struct ModelFit {
  double slope = 0;
  double intercept = 0;
  double relative_residual = 0;  // max |I − fit| / max |I|
};

struct DivergenceReport {
  DivergenceKind kind = DivergenceKind::CorrWeyl;
  std::vector<double> cutoffs;
  std::vector<double> integrals;
  ModelFit linear;       // I against 1/ε (or L)
  ModelFit logarithmic;  // I against ln(1/ε) (or ln L)
  Growth growth = Growth::Undetermined;
};

inline constexpr double kGrowthFitTolerance = 1e-3;

/// Norm integrals of the non-normalizable states against a cutoff.
/// Plane waves take increasing L > 1 and integrate over [−L, L]; the
/// correlation eigenfunctions take decreasing ε in (0, 1) and integrate
/// over [ε, 1].
DivergenceReport divergence_scan(DivergenceKind kind, std::span<const double> cutoffs);

}  // namespace qgamble

#endif  // QGAMBLE_ROUNDWAVES_HPP
