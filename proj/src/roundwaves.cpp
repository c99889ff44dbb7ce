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

#include "qgamble/roundwaves.hpp"

#include <algorithm>
#include <numbers>
#include <string>
#include <utility>

namespace qgamble {

namespace {

constexpr int kDirectPsiLimit = 20;

void require_order(int n, int ceiling, const char* what) {
  if (n < 0 || n > ceiling) {
    throw InvalidInput(std::string(what) + ": order " + std::to_string(n) + " outside 0.." +
                       std::to_string(ceiling));
  }
}

void require_finite_xi(double xi, const char* what) {
  if (!std::isfinite(xi)) throw InvalidInput(std::string(what) + ": non-finite argument");
}

double log_norm_constant(int n) {
  // log of (2ⁿ n! √π)^{−1/2}
  return -0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0) + 0.5 * std::log(std::numbers::pi));
}

// (ψ_{n−1}(ξ), ψ_n(ξ)) from the three-term recurrence of the normalized
// functions; ψ_{−1} is reported as 0.
std::pair<double, double> hermite_function_pair(int n, double xi) {
  double prev = 0.0;
  double cur = std::exp(-0.5 * xi * xi) / std::sqrt(std::sqrt(std::numbers::pi));
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * xi * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

// Bisection to adjacent doubles on a bracketing interval.
template <typename Fn>
double bisect(Fn&& fn, double lo, double hi, const char* what) {
  double flo = fn(lo);
  double fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw NumericalError(std::string(what) + ": no sign change on [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fmid = fn(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  return std::abs(flo) <= std::abs(fhi) ? lo : hi;
}

// ∫ f over [a, b] by composite Simpson with an even number of panels.
template <typename Fn>
double simpson(Fn&& fn, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = fn(a) + fn(b);
  for (int i = 1; i < panels; ++i) sum += fn(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

ModelFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double count = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / count, my = sy / count;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  ModelFit fit;
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double worst = 0, scale = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    worst = std::max(worst, std::abs(y[i] - (fit.slope * x[i] + fit.intercept)));
    scale = std::max(scale, std::abs(y[i]));
  }
  fit.relative_residual = scale > 0 ? worst / scale : 0.0;
  return fit;
}

}  // namespace

double hermite(int n, double xi) {
  require_order(n, kMaxHermiteOrder, "hermite");
  require_finite_xi(xi, "hermite");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * xi;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * xi * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double psi(int n, double xi) {
  require_order(n, kMaxHermiteOrder, "psi");
  require_finite_xi(xi, "psi");
  if (n <= kDirectPsiLimit) {
    return std::exp(log_norm_constant(n) - 0.5 * xi * xi) * hermite(n, xi);
  }
  // H_n grows like (2ξ)ⁿ; carry the recurrence with a running log scale.
  double prev = 1.0;
  double cur = 2.0 * xi;
  double log_scale = 0.0;
  for (int k = 1; k < n; ++k) {
    double next = 2.0 * xi * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
    const double mag = std::max(std::abs(cur), std::abs(prev));
    if (mag > 1e100) {
      prev /= mag;
      cur /= mag;
      log_scale += std::log(mag);
    }
  }
  if (cur == 0.0) return 0.0;
  const double sign = cur < 0.0 ? -1.0 : 1.0;
  return sign * std::exp(log_norm_constant(n) - 0.5 * xi * xi + log_scale + std::log(std::abs(cur)));
}

double density_half_width(int n) { return std::sqrt(2.0 * n + 1.0) + 6.0; }

double trapezoid(std::span<const double> values, double step) {
  if (values.size() < 2) return 0.0;
  double sum = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
  return sum * step;
}

std::vector<double> linspace(double lo, double hi, std::size_t samples) {
  if (samples < 2 || !(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidInput("linspace: need lo < hi and at least two samples");
  }
  std::vector<double> out(samples);
  const double step = (hi - lo) / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

DensityGrid density_grid(int n, double xi_min, double xi_max, std::size_t samples) {
  require_order(n, kMaxHermiteOrder, "density_grid");
  DensityGrid grid;
  grid.n = n;
  grid.xi = linspace(xi_min, xi_max, samples);
  grid.psi.reserve(samples);
  grid.density.reserve(samples);
  for (double x : grid.xi) {
    const double p = psi(n, x);
    grid.psi.push_back(p);
    grid.density.push_back(p * p);
  }
  return grid;
}

std::vector<double> hermite_zeros(int n) {
  if (n < 1 || n > kMaxPeakOrder) {
    throw InvalidInput("hermite_zeros: order " + std::to_string(n) + " outside 1.." +
                       std::to_string(kMaxPeakOrder));
  }
  std::vector<double> zeros{0.0};
  for (int k = 2; k <= n; ++k) {
    // Zeros of H_k interlace those of H_{k−1} and lie inside ±√(2k+1).
    const double bound = std::sqrt(2.0 * k + 1.0) + 1.0;
    std::vector<double> edges;
    edges.reserve(zeros.size() + 2);
    edges.push_back(-bound);
    edges.insert(edges.end(), zeros.begin(), zeros.end());
    edges.push_back(bound);
    const auto fn = [k](double x) { return hermite_function_pair(k, x).second; };
    std::vector<double> next;
    next.reserve(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      next.push_back(bisect(fn, edges[i], edges[i + 1], "hermite_zeros"));
    }
    zeros = std::move(next);
  }
  return zeros;
}

PeakSet density_peaks(int n) {
  require_order(n, kMaxPeakOrder, "density_peaks");
  PeakSet peaks;
  peaks.n = n;
  for (int k = 0; k <= n; ++k) peaks.classical_centers.push_back(static_cast<double>(2 * k - n));
  if (n == 0) {
    peaks.maxima = {0.0};
    return peaks;
  }
  // 2n·H_{n−1} − ξ·H_n rescaled by the positive factor C_n e^{−ξ²/2}.
  const auto slope_factor = [n](double x) {
    const auto [lower, upper] = hermite_function_pair(n, x);
    return std::sqrt(2.0 * n) * lower - x * upper;
  };
  const auto density = [n](double x) {
    const double p = hermite_function_pair(n, x).second;
    return p * p;
  };
  const double bound = std::sqrt(2.0 * n + 1.0) + 2.0;
  std::vector<double> edges{-bound};
  const auto zeros = hermite_zeros(n);
  edges.insert(edges.end(), zeros.begin(), zeros.end());
  edges.push_back(bound);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double x = bisect(slope_factor, edges[i], edges[i + 1], "density_peaks");
    const double delta = 1e-4;
    const double centre = density(x);
    if (!(centre > density(x - delta) && centre > density(x + delta))) {
      throw NumericalError("density_peaks: stationary point at " + std::to_string(x) +
                           " is not a maximum");
    }
    peaks.maxima.push_back(x);
  }
  // P_n is even; mirror the right half so the set is exactly symmetric.
  const std::size_t count = peaks.maxima.size();
  for (std::size_t k = 0; k < count / 2; ++k) peaks.maxima[k] = -peaks.maxima[count - 1 - k];
  if (count % 2 == 1) peaks.maxima[count / 2] = 0.0;
  return peaks;
}

double schrodinger_residual(int n, std::span<const double> grid, double h) {
  require_order(n, kMaxHermiteOrder, "schrodinger_residual");
  const double limit = std::sqrt(2.0 * n + 1.0) + 6.0;
  for (double x : grid) {
    if (!(std::abs(x) <= limit)) {
      throw InvalidInput("schrodinger_residual: grid point " + std::to_string(x) +
                         " outside the admissible window");
    }
  }
  return schrodinger_residual([n](double x) { return psi(n, x); }, 2.0 * n + 1.0, grid, h);
}

double ClassicalMixture::operator()(double xi) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const double d = xi - centers[k];
    sum += weights[k] * std::exp(-d * d);
  }
  return sum / std::sqrt(std::numbers::pi);
}

ClassicalMixture classical_mixture(int n) {
  if (n < 0) throw InvalidInput("classical_mixture: negative round count");
  ClassicalMixture mix;
  mix.n = n;
  double w = std::ldexp(1.0, -n);
  for (int k = 0; k <= n; ++k) {
    mix.weights.push_back(w);
    mix.centers.push_back(static_cast<double>(n - 2 * k));
    w = w * (n - k) / (k + 1);
  }
  return mix;
}

std::vector<double> classical_mixture_density(int n, std::span<const double> grid) {
  const auto mix = classical_mixture(n);
  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid) out.push_back(mix(x));
  return out;
}

ComparisonReport compare_quantum_classical(int n) {
  if (n < 1 || n > 50) throw InvalidInput("compare_quantum_classical: n must lie in 1..50");
  ComparisonReport out;
  out.n = n;
  const auto peaks = density_peaks(n);
  out.quantum_maxima = peaks.maxima;
  out.classical_centers = peaks.classical_centers;

  const auto mix = classical_mixture(n);
  const double q0 = psi(n, 0.0);
  out.quantum_center_density = q0 * q0;
  out.classical_center_density = mix(0.0);
  if (n % 2 == 1) out.quantum_minimum_deeper = out.quantum_center_density < out.classical_center_density;

  // The classical mixture reaches out to ±n, past the quantum window for large n.
  const double half = std::max(density_half_width(n), n + 6.0);
  const auto samples = static_cast<std::size_t>(std::llround(2.0 * half / kQuadratureStep)) + 1;
  const auto grid = linspace(-half, half, samples);
  const double step = grid[1] - grid[0];
  std::vector<double> q2, c2;
  q2.reserve(samples);
  c2.reserve(samples);
  for (double x : grid) {
    const double p = hermite_function_pair(n, x).second;
    q2.push_back(x * x * p * p);
    c2.push_back(x * x * mix(x));
  }
  out.quantum_variance = trapezoid(q2, step);
  out.classical_variance = trapezoid(c2, step);
  out.outermost_quantum_peak = peaks.maxima.back();
  out.outermost_deviation = n - out.outermost_quantum_peak;
  return out;
}

std::string_view to_string(Ordering ordering) {
  return ordering == Ordering::Printed ? "printed" : "weyl";
}

Ordering parse_ordering(std::string_view text) {
  if (text == "printed") return Ordering::Printed;
  if (text == "weyl") return Ordering::Weyl;
  throw InvalidInput("unknown ordering '" + std::string(text) + "'");
}

CorrelationEigenfunction correlation_eigenfunction(double lambda, Ordering ordering,
                                                   std::span<const double> grid,
                                                   double kappa_product) {
  if (!std::isfinite(lambda) || !(kappa_product > 0.0)) {
    throw InvalidInput("correlation_eigenfunction: need finite λ and positive κ₁κ₂");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i]) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw InvalidInput("correlation_eigenfunction: grid must be positive and ascending");
    }
  }
  const double shift = ordering == Ordering::Printed ? 1.0 : 0.5;
  const std::complex<double> i_unit{0.0, 1.0};

  CorrelationEigenfunction out;
  out.lambda = lambda;
  out.kappa_product = kappa_product;
  out.ordering = ordering;
  out.exponent = std::complex<double>(-shift, -lambda / kappa_product);
  out.xi.assign(grid.begin(), grid.end());

  const auto eval = [&](double x) { return std::exp(out.exponent * std::log(x)); };
  out.values.reserve(grid.size());
  for (double x : grid) {
    const auto v = eval(x);
    out.values.push_back(v);
    out.max_abs = std::max(out.max_abs, std::abs(v));

    const double h = 1e-5 * x;
    const auto derivative = (eval(x + h) - eval(x - h)) / (2.0 * h);
    const auto lhs = i_unit * kappa_product * (x * derivative + shift * v);
    out.ode_residual = std::max(out.ode_residual, std::abs(lhs - lambda * v));
  }
  return out;
}

std::string_view to_string(DivergenceKind kind) {
  switch (kind) {
    case DivergenceKind::PlaneWave:
      return "plane";
    case DivergenceKind::CorrPrinted:
      return "printed";
    case DivergenceKind::CorrWeyl:
      return "weyl";
  }
  return "weyl";
}

DivergenceKind parse_divergence_kind(std::string_view text) {
  if (text == "plane") return DivergenceKind::PlaneWave;
  if (text == "printed") return DivergenceKind::CorrPrinted;
  if (text == "weyl") return DivergenceKind::CorrWeyl;
  throw InvalidInput("unknown divergence kind '" + std::string(text) + "'");
}

std::string_view to_string(Growth growth) {
  switch (growth) {
    case Growth::Linear:
      return "linear";
    case Growth::Logarithmic:
      return "logarithmic";
    case Growth::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

DivergenceReport divergence_scan(DivergenceKind kind, std::span<const double> cutoffs) {
  if (cutoffs.size() < 4) throw InvalidInput("divergence_scan: need at least four cutoffs");
  const bool plane = kind == DivergenceKind::PlaneWave;
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    const double c = cutoffs[i];
    const bool in_range = plane ? (c > 1.0 && std::isfinite(c)) : (c > 0.0 && c < 1.0);
    const bool ordered = i == 0 || (plane ? c > cutoffs[i - 1] : c < cutoffs[i - 1]);
    if (!in_range || !ordered) {
      throw InvalidInput(plane ? "divergence_scan: plane-wave cutoffs must increase above 1"
                               : "divergence_scan: cutoffs must decrease inside (0, 1)");
    }
  }

  constexpr int kPanels = 4000;
  constexpr double kMomentum = 1.0;
  const double lambda = 1.0;  // |Ψ_c| does not depend on λ

  DivergenceReport out;
  out.kind = kind;
  out.cutoffs.assign(cutoffs.begin(), cutoffs.end());
  std::vector<double> x_lin, x_log;
  for (double c : cutoffs) {
    double integral = 0.0;
    if (plane) {
      integral = simpson([](double x) { return std::norm(std::polar(1.0, kMomentum * x)); }, -c, c,
                         kPanels);
      x_lin.push_back(c);
      x_log.push_back(std::log(c));
    } else {
      const Ordering ordering = kind == DivergenceKind::CorrPrinted ? Ordering::Printed : Ordering::Weyl;
      const double shift = ordering == Ordering::Printed ? 1.0 : 0.5;
      const std::complex<double> s{-shift, -lambda};
      // ξ = eᵗ maps [ε, 1] onto [ln ε, 0].
      integral = simpson(
          [&](double t) {
            const double x = std::exp(t);
            return std::norm(std::exp(s * t)) * x;
          },
          std::log(c), 0.0, kPanels);
      x_lin.push_back(1.0 / c);
      x_log.push_back(-std::log(c));
    }
    out.integrals.push_back(integral);
  }
  out.linear = fit_line(x_lin, out.integrals);
  out.logarithmic = fit_line(x_log, out.integrals);

  const bool lin_ok = out.linear.relative_residual < kGrowthFitTolerance;
  const bool log_ok = out.logarithmic.relative_residual < kGrowthFitTolerance;
  if (lin_ok && (!log_ok || out.linear.relative_residual <= out.logarithmic.relative_residual)) {
    out.growth = Growth::Linear;
  } else if (log_ok) {
    out.growth = Growth::Logarithmic;
  }
  return out;
}

}  // namespace qgamble
