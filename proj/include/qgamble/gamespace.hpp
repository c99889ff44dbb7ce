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

// Arbiter and pay-off operators of the two-player game in the truncated
// round-number basis |0⟩ … |N⟩.
//
// The ladder operators follow the tower normalization ⟨n+1|a₊|n⟩ = √(n+1).
// Two boundary modes close the tower at the last round:
//   finite    a₊|N⟩ = 0 (the zero vector, not |0⟩)
//   periodic  a₊|N⟩ = |0⟩ (wrap coefficient 1)
// Pay-off operators are π₁ = κ₁(a₊ + a₋)/√2 and π₂ = −iκ₂(a₊ − a₋)/√2.

#ifndef QGAMBLE_GAMESPACE_HPP
#define QGAMBLE_GAMESPACE_HPP

#include <complex>
#include <string_view>

#include "qgamble/numerics.hpp"

namespace qgamble {

enum class BoundaryMode { Finite, Periodic };

std::string_view to_string(BoundaryMode mode);
BoundaryMode parse_boundary_mode(std::string_view text);

enum class Player { One = 1, Two = 2 };

class GameSpace {
 public:
  // Throws InvalidInput for negative rounds, non-positive or non-finite
  // κ, or a one-state periodic game.
  GameSpace(int rounds_max, BoundaryMode mode = BoundaryMode::Finite, double kappa1 = 1.0,
            double kappa2 = 1.0);

  int rounds_max() const { return rounds_max_; }
  Index dim() const { return rounds_max_ + 1; }
  BoundaryMode mode() const { return mode_; }
  double kappa1() const { return kappa1_; }
  double kappa2() const { return kappa2_; }
  double kappa(Player p) const { return p == Player::One ? kappa1_ : kappa2_; }

  // A number state away from the boundary rows that truncation disturbs.
  bool is_interior(int n) const;

 private:
  int rounds_max_;
  BoundaryMode mode_;
  double kappa1_;
  double kappa2_;
};

struct LadderPair {
  MatrixXc raise;  // a₊
  MatrixXc lower;  // a₋ = a₊†
};

struct PayoffPair {
  MatrixXc pi1;
  MatrixXc pi2;
};

struct OperatorSet {
  GameSpace gamespace;
  MatrixXc a_plus;
  MatrixXc a_minus;
  MatrixXc number;
  MatrixXc pi1;
  MatrixXc pi2;
  MatrixXc precorrelation;
};

LadderPair build_ladder(const GameSpace& gs);
MatrixXc build_number(const GameSpace& gs);
PayoffPair build_payoffs(const GameSpace& gs);

/// ½(π₁π₂ + π₂π₁).
MatrixXc build_precorrelation(const GameSpace& gs);

OperatorSet build_operators(const GameSpace& gs);

/// Standard basis vector |n⟩.
VectorXc number_state(const GameSpace& gs, int n);

// Commutator bookkeeping for one game space.
//
// The "finite pattern" is diag(1,…,1,1−N), i.e. δ − Nδ_{Nn}δ_{Nm}; the
// "periodic pattern" additionally subtracts δ_{0n}δ_{0m}.  The finite pattern
// has trace 1 and cannot be a commutator; the "trace-free pattern"
// diag(1,…,1,−N) is what the finite ladder actually produces.
struct CommutatorAudit {
  GameSpace gamespace{0};
  MatrixXc ladder_commutator;   // [a₋, a₊]
  MatrixXc payoff_commutator;   // [π₁, π₂]
  double ladder_commutator_trace = 0;
  // max |[π₁,π₂](m,n) + iκ₁κ₂δ_mn| over m,n ≤ N−2 (0 when that block is empty).
  double interior_deviation = 0;
  // Sign s of the interior value s·iκ₁κ₂ (−1 under the matrix convention).
  int interior_sign = 0;
  RealVector<double> finite_pattern;
  RealVector<double> finite_pattern_deviation;  // per diagonal entry
  double finite_pattern_max_deviation = 0;       // full matrix, off-diagonals included
  RealVector<double> periodic_pattern;
  RealVector<double> periodic_pattern_deviation;
  double periodic_pattern_max_deviation = 0;
  RealVector<double> trace_free_pattern;
  double trace_free_pattern_max_deviation = 0;
  std::complex<double> ground_sector_commutator;  // ⟨0|[π₁,π₂]|0⟩
};

CommutatorAudit audit_commutators(const GameSpace& gs);

struct VarianceResult {
  int n = 0;
  Player player = Player::One;
  double value = 0;     // ⟨n|π_j²|n⟩
  double expected = 0;  // (n + ½)κ_j²
  bool interior = false;
};

VarianceResult payoff_variance(const GameSpace& gs, int n, Player player);

}  // namespace qgamble

#endif  // QGAMBLE_GAMESPACE_HPP
