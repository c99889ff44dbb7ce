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

#include "qgamble/gamespace.hpp"

#include <cmath>
#include <string>

namespace qgamble {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_round(const GameSpace& gs, int n, const char* what) {
  if (n < 0 || n > gs.rounds_max()) {
    throw InvalidInput(std::string(what) + ": round index " + std::to_string(n) +
                       " outside 0.." + std::to_string(gs.rounds_max()));
  }
}

double pattern_max_deviation(const MatrixXc& m, const RealVector<double>& diag) {
  MatrixXc target = MatrixXc::Zero(m.rows(), m.cols());
  target.diagonal() = diag.cast<std::complex<double>>();
  return (m - target).cwiseAbs().maxCoeff();
}

}  // namespace

std::string_view to_string(BoundaryMode mode) {
  return mode == BoundaryMode::Finite ? "finite" : "periodic";
}

BoundaryMode parse_boundary_mode(std::string_view text) {
  if (text == "finite") return BoundaryMode::Finite;
  if (text == "periodic") return BoundaryMode::Periodic;
  throw InvalidInput("unknown boundary mode '" + std::string(text) + "'");
}

GameSpace::GameSpace(int rounds_max, BoundaryMode mode, double kappa1, double kappa2)
    : rounds_max_(rounds_max), mode_(mode), kappa1_(kappa1), kappa2_(kappa2) {
  if (rounds_max < 0) {
    throw InvalidInput("GameSpace: rounds_max must be non-negative");
  }
  if (mode == BoundaryMode::Periodic && rounds_max < 1) {
    throw InvalidInput("GameSpace: a periodic game needs at least one round");
  }
  if (!(std::isfinite(kappa1) && kappa1 > 0.0) || !(std::isfinite(kappa2) && kappa2 > 0.0)) {
    throw InvalidInput("GameSpace: pay-off units must be finite and positive");
  }
}

bool GameSpace::is_interior(int n) const {
  if (n < 0 || n >= rounds_max_) return false;
  return mode_ == BoundaryMode::Finite || n >= 1;
}

LadderPair build_ladder(const GameSpace& gs) {
  const Index dim = gs.dim();
  MatrixXc raise = MatrixXc::Zero(dim, dim);
  for (Index n = 0; n + 1 < dim; ++n) {
    raise(n + 1, n) = std::sqrt(static_cast<double>(n + 1));
  }
  if (gs.mode() == BoundaryMode::Periodic) raise(0, dim - 1) = 1.0;
  MatrixXc lower = raise.adjoint();
  return {std::move(raise), std::move(lower)};
}

MatrixXc build_number(const GameSpace& gs) {
  const auto ladder = build_ladder(gs);
  return ladder.raise * ladder.lower;
}

PayoffPair build_payoffs(const GameSpace& gs) {
  const auto ladder = build_ladder(gs);
  const double root2 = std::sqrt(2.0);
  MatrixXc pi1 = gs.kappa1() * (ladder.raise + ladder.lower) / root2;
  MatrixXc pi2 = -kI * gs.kappa2() * (ladder.raise - ladder.lower) / root2;
  return {std::move(pi1), std::move(pi2)};
}

MatrixXc build_precorrelation(const GameSpace& gs) {
  const auto pay = build_payoffs(gs);
  return anticommutator(pay.pi1, pay.pi2) / 2.0;
}

OperatorSet build_operators(const GameSpace& gs) {
  auto ladder = build_ladder(gs);
  auto pay = build_payoffs(gs);
  MatrixXc number = ladder.raise * ladder.lower;
  MatrixXc pc = anticommutator(pay.pi1, pay.pi2) / 2.0;
  return OperatorSet{gs,
                     std::move(ladder.raise),
                     std::move(ladder.lower),
                     std::move(number),
                     std::move(pay.pi1),
                     std::move(pay.pi2),
                     std::move(pc)};
}

VectorXc number_state(const GameSpace& gs, int n) {
  require_round(gs, n, "number_state");
  VectorXc v = VectorXc::Zero(gs.dim());
  v(n) = 1.0;
  return v;
}

CommutatorAudit audit_commutators(const GameSpace& gs) {
  const auto ops = build_operators(gs);
  const Index dim = gs.dim();
  const int rounds = gs.rounds_max();
  const double k12 = gs.kappa1() * gs.kappa2();

  CommutatorAudit audit;
  audit.gamespace = gs;
  audit.ladder_commutator = extended_commutator(ops.a_minus, ops.a_plus);
  audit.payoff_commutator = extended_commutator(ops.pi1, ops.pi2);
  audit.ladder_commutator_trace = std::real(audit.ladder_commutator.trace());

  const Index interior = dim - 2;  // indices 0 … N−2
  if (interior > 0) {
    const MatrixXc block = audit.payoff_commutator.topLeftCorner(interior, interior);
    const MatrixXc target = -kI * k12 * MatrixXc::Identity(interior, interior);
    audit.interior_deviation = (block - target).cwiseAbs().maxCoeff();
    const double mean_im = std::imag(block.trace()) / static_cast<double>(interior);
    audit.interior_sign = mean_im < 0.0 ? -1 : (mean_im > 0.0 ? 1 : 0);
  }

  audit.finite_pattern = RealVector<double>::Ones(dim);
  audit.finite_pattern(dim - 1) -= rounds;
  audit.periodic_pattern = audit.finite_pattern;
  audit.periodic_pattern(0) -= 1.0;
  audit.trace_free_pattern = RealVector<double>::Ones(dim);
  audit.trace_free_pattern(dim - 1) = -rounds;

  const RealVector<double> diag = audit.ladder_commutator.diagonal().real();
  audit.finite_pattern_deviation = (diag - audit.finite_pattern).cwiseAbs();
  audit.periodic_pattern_deviation = (diag - audit.periodic_pattern).cwiseAbs();
  audit.finite_pattern_max_deviation =
      pattern_max_deviation(audit.ladder_commutator, audit.finite_pattern);
  audit.periodic_pattern_max_deviation =
      pattern_max_deviation(audit.ladder_commutator, audit.periodic_pattern);
  audit.trace_free_pattern_max_deviation =
      pattern_max_deviation(audit.ladder_commutator, audit.trace_free_pattern);

  audit.ground_sector_commutator = audit.payoff_commutator(0, 0);
  return audit;
}

VarianceResult payoff_variance(const GameSpace& gs, int n, Player player) {
  require_round(gs, n, "payoff_variance");
  const auto pay = build_payoffs(gs);
  const MatrixXc& pi = player == Player::One ? pay.pi1 : pay.pi2;
  const VectorXc state = number_state(gs, n);
  const double kappa = gs.kappa(player);

  VarianceResult out;
  out.n = n;
  out.player = player;
  out.value = std::real(expectation(state, pi * pi));
  out.expected = (n + 0.5) * kappa * kappa;
  out.interior = gs.is_interior(n);
  return out;
}

}  // namespace qgamble
