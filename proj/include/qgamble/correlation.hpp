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

#ifndef QGAMBLE_CORRELATION_HPP
#define QGAMBLE_CORRELATION_HPP

#include <optional>
#include <vector>

#include "qgamble/gamespace.hpp"

namespace qgamble {

inline constexpr double kSignZeroBand = 1e-10;
inline constexpr double kPearsonFloor = 1e-12;

// Pre-correlation split into its even- and odd-round sectors.
struct ParityBlocks {
  MatrixXc even;
  MatrixXc odd;
  std::vector<Index> even_indices;  // block row -> full-space row
  std::vector<Index> odd_indices;
};

/// Splits a finite-mode pre-correlation by round parity.  Any entry
/// above `tol` that couples rounds differing by something other than 0
/// or 2 raises StructuralError naming the entry.
ParityBlocks parity_blocks(const MatrixXc& pc, double tol = kConstructionTolerance);

/// ⟨PC⟩ − ⟨π₁⟩⟨π₂⟩ in `state`.
double correlation_value(const VectorXc& state, const MatrixXc& pi1, const MatrixXc& pi2,
                         const MatrixXc& pc);

struct CorrelationRow {
  double eigenvalue = 0;
  Parity parity = Parity::Mixed;
  double exp_pi1 = 0;
  double exp_pi2 = 0;
  double sigma1 = 0;
  double sigma2 = 0;
  double correlation = 0;
  std::optional<double> pearson;  // empty when σ₁σ₂ ≤ 1e-12
  int sign_class = 0;
};

struct CorrelationReport {
  GameSpace gamespace;
  std::vector<CorrelationRow> rows;  // ascending eigenvalue
  MatrixXc eigenvectors;             // column k belongs to rows[k]
};

CorrelationReport correlation_spectrum(const GameSpace& gs);

/// sign(λ) with |λ| ≤ 1e-10·max(1, max|λ|) mapped to 0.
std::vector<int> sign_classification(const std::vector<double>& eigenvalues);
std::vector<int> sign_classification(const CorrelationReport& report);

}  // namespace qgamble

#endif  // QGAMBLE_CORRELATION_HPP
