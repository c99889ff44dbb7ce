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

#include "qgamble/numerics.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "qgamble/gamespace.hpp"

using namespace qgamble;

namespace {

const std::complex<double> kI{0.0, 1.0};

MatrixXc from_rows(std::initializer_list<std::initializer_list<std::complex<double>>> rows) {
  MatrixXc m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index r = 0;
  for (const auto& row : rows) {
    Index c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

}  // namespace

TEST(Multiply, IdentityAndLadderProducts) {
  EXPECT_TRUE(multiply(MatrixXc::Identity(2, 2), MatrixXc::Identity(2, 2)).isIdentity(0.0));

  const MatrixXc up = from_rows({{0, 1}, {0, 0}});
  const MatrixXc down = from_rows({{0, 0}, {1, 0}});
  EXPECT_EQ(multiply(up, down), from_rows({{1, 0}, {0, 0}}));

  const auto ladder = build_ladder(GameSpace(2));
  MatrixXc expected = MatrixXc::Zero(3, 3);
  expected.diagonal() << 0.0, 1.0, 2.0;
  EXPECT_LE((multiply(ladder.raise, ladder.lower) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Multiply, RejectsMismatchAndNonFinite) {
  EXPECT_THROW(multiply(MatrixXc::Identity(2, 2), MatrixXc::Identity(3, 3)), InvalidInput);
  MatrixXc bad = MatrixXc::Identity(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(multiply(bad, MatrixXc::Identity(2, 2)), InvalidInput);
  EXPECT_THROW(adjoint(MatrixXc(2, 3)), InvalidInput);
}

TEST(Adjoint, ConjugateTransposeAndInvolution) {
  const MatrixXc a = from_rows({{0, kI}, {0, 0}});
  EXPECT_EQ(adjoint(a), from_rows({{0, 0}, {-kI, 0}}));
  EXPECT_EQ(adjoint(adjoint(a)), a);

  const auto ladder = build_ladder(GameSpace(2));
  EXPECT_EQ(adjoint(ladder.raise), ladder.lower);
}

TEST(Commutator, IdentityCommutesAndLadderBoundaries) {
  std::mt19937_64 rng(7);
  const MatrixXc m = oracle::random_hermitian(rng, 4);
  EXPECT_EQ(commutator(MatrixXc::Identity(4, 4), m).cwiseAbs().maxCoeff(), 0.0);

  const auto fin = build_ladder(GameSpace(2, BoundaryMode::Finite));
  MatrixXc expected = MatrixXc::Zero(3, 3);
  expected.diagonal() << 1.0, 1.0, -2.0;
  EXPECT_LE((commutator(fin.lower, fin.raise) - expected).cwiseAbs().maxCoeff(), 1e-14);

  const auto per = build_ladder(GameSpace(2, BoundaryMode::Periodic));
  expected.diagonal() << 0.0, 1.0, -1.0;
  EXPECT_LE((commutator(per.lower, per.raise) - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Commutator, AntisymmetricAndTraceless) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 1 + static_cast<Index>(trial % 9);
    const MatrixXc a = oracle::random_hermitian(rng, n) + kI * oracle::random_hermitian(rng, n);
    const MatrixXc b = oracle::random_hermitian(rng, n);
    EXPECT_LE((commutator(a, b) + commutator(b, a)).cwiseAbs().maxCoeff(), 1e-14);
    const double bound = 1e-10 * n * inf_norm(a) * inf_norm(b);
    EXPECT_LE(std::abs(commutator(a, b).trace()), bound);
  }
}

TEST(Expectation, NumberAndPayoffStates) {
  const GameSpace gs(4);
  const auto ops = build_operators(gs);
  EXPECT_EQ(expectation(number_state(gs, 0), ops.number), 0.0);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(expectation(number_state(gs, n), ops.pi1), 0.0) << n;
  }
  EXPECT_NEAR(std::real(expectation(number_state(gs, 0), MatrixXc(ops.pi1 * ops.pi1))), 0.5, 1e-15);
}

TEST(Expectation, RejectsUnnormalizedAndMismatched) {
  const GameSpace gs(2);
  const auto ops = build_operators(gs);
  VectorXc v = VectorXc::Ones(3);
  EXPECT_THROW(expectation(v, ops.pi1), InvalidInput);
  EXPECT_THROW(expectation(VectorXc::Unit(2, 0), ops.pi1), InvalidInput);
}

TEST(Expectation, RealForHermitianOperators) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixXc h = oracle::random_hermitian(rng, 5);
    VectorXc v = oracle::random_hermitian(rng, 5).col(0) + kI * oracle::random_hermitian(rng, 5).col(1);
    v.normalize();
    EXPECT_LE(std::abs(std::imag(expectation(v, h))), 1e-12);
  }
}

TEST(HermitianEigen, DiagonalInput) {
  MatrixXc m = MatrixXc::Zero(3, 3);
  m.diagonal() << 3.0, 1.0, 2.0;
  const auto d = hermitian_eigen(m);
  EXPECT_NEAR(d.eigenvalues(0), 1.0, 1e-14);
  EXPECT_NEAR(d.eigenvalues(1), 2.0, 1e-14);
  EXPECT_NEAR(d.eigenvalues(2), 3.0, 1e-14);
}

TEST(HermitianEigen, SmallPreCorrelation) {
  // λ(λ² − ½) = 0
  const auto d = hermitian_eigen(build_precorrelation(GameSpace(2)));
  EXPECT_NEAR(d.eigenvalues(0), -1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(d.eigenvalues(1), 0.0, 1e-12);
  EXPECT_NEAR(d.eigenvalues(2), 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(HermitianEigen, RejectsNonHermitianAndOversize) {
  MatrixXc m = MatrixXc::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eigen(m), InvalidInput);
  EXPECT_THROW(hermitian_eigen(MatrixXc::Identity(kMaxEigenDim + 1, kMaxEigenDim + 1)), InvalidInput);
}

TEST(HermitianEigen, MatchesCharacteristicPolynomialOracle) {
  std::vector<MatrixXc> cases;
  cases.push_back(build_precorrelation(GameSpace(1)));
  cases.push_back(build_precorrelation(GameSpace(2)));
  cases.push_back(build_precorrelation(GameSpace(3)));
  cases.push_back(build_precorrelation(GameSpace(3, BoundaryMode::Periodic)));
  cases.push_back(build_payoffs(GameSpace(3, BoundaryMode::Finite, 2.0, 0.5)).pi2);
  std::mt19937_64 rng(2026);
  for (Index n = 1; n <= 4; ++n) {
    for (int k = 0; k < 5; ++k) cases.push_back(oracle::random_hermitian(rng, n));
  }
  for (const auto& m : cases) {
    const auto got = hermitian_eigen(m);
    const auto want = oracle::eigenvalues_by_charpoly(m);
    ASSERT_EQ(static_cast<std::size_t>(got.size()), want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
      EXPECT_NEAR(got.eigenvalues(static_cast<Index>(k)), want[k], 1e-9) << m;
    }
    for (std::size_t k = 0; k < want.size(); ++k) {
      const bool simple = (k == 0 || want[k] - want[k - 1] > 1e-6) &&
                          (k + 1 == want.size() || want[k + 1] - want[k] > 1e-6);
      if (!simple) continue;
      const VectorXc ref = oracle::inverse_iteration(m, want[k]);
      EXPECT_NEAR(std::abs(ref.dot(got.eigenvectors.col(static_cast<Index>(k)))), 1.0, 1e-9);
    }
  }
}

TEST(HermitianEigen, InvariantsOnRandomMatrices) {
  std::mt19937_64 rng(99);
  for (Index n : {1, 2, 5, 8, 16, 33, 64}) {
    const MatrixXc m = oracle::random_hermitian(rng, n);
    const auto d = hermitian_eigen(m);
    const auto defects = spectral_defects(m, d);
    EXPECT_LE(defects.orthonormality, 1e-10);
    EXPECT_LE(defects.residual, 1e-10 * (1.0 + inf_norm(m)));
    EXPECT_LE(defects.completeness, 1e-10);
    for (Index k = 1; k < n; ++k) EXPECT_LE(d.eigenvalues(k - 1), d.eigenvalues(k));
  }
}

TEST(HermitianEigen, DegenerateSpectrum) {
  std::mt19937_64 rng(5);
  const MatrixXc p = oracle::random_permutation(rng, 6);
  MatrixXc m = MatrixXc::Zero(6, 6);
  m.diagonal() << 2.0, 2.0, 2.0, -1.0, -1.0, 4.0;
  // Unitary mixing inside the degenerate blocks.
  const MatrixXc u = Eigen::HouseholderQR<MatrixXc>(
                         oracle::random_hermitian(rng, 6) + kI * oracle::random_hermitian(rng, 6))
                         .householderQ();
  const MatrixXc h = u * p * m * p.adjoint() * u.adjoint();
  const auto d = hermitian_eigen(MatrixXc((h + h.adjoint()) / 2.0));
  const auto defects = spectral_defects(h, d);
  EXPECT_LE(defects.residual, 1e-10 * (1.0 + inf_norm(h)));
  EXPECT_LE(defects.orthonormality, 1e-10);
  EXPECT_NEAR(d.eigenvalues(0), -1.0, 1e-10);
  EXPECT_NEAR(d.eigenvalues(2), 2.0, 1e-10);
  EXPECT_NEAR(d.eigenvalues(5), 4.0, 1e-10);
}

TEST(HermitianEigen, DeterministicWithPhaseConvention) {
  std::mt19937_64 rng(17);
  const MatrixXc m = oracle::random_hermitian(rng, 12);
  const auto a = hermitian_eigen(m);
  const auto b = hermitian_eigen(m);
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.eigenvectors, b.eigenvectors);
  for (Index k = 0; k < a.size(); ++k) {
    const auto col = a.eigenvectors.col(k);
    Index first = 0;
    while (std::abs(col(first)) <= 1e-8) ++first;
    EXPECT_EQ(std::imag(col(first)), 0.0);
    EXPECT_GT(std::real(col(first)), 0.0);
  }
}

TEST(HermitianEigen, PermutationInvariantSpectrum) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 2 + trial % 10;
    const MatrixXc m = oracle::random_hermitian(rng, n);
    const MatrixXc p = oracle::random_permutation(rng, n);
    const auto a = hermitian_eigen(m);
    const auto b = hermitian_eigen(MatrixXc(p * m * p.adjoint()));
    EXPECT_LE((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(HermitianEigen, ImaginaryMatricesHaveSymmetricSpectrum) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 1 + trial % 12;
    const auto d = hermitian_eigen(oracle::random_imaginary_hermitian(rng, n));
    for (Index k = 0; k < n; ++k) {
      EXPECT_NEAR(d.eigenvalues(k), -d.eigenvalues(n - 1 - k), 1e-10);
    }
  }
}

TEST(ParityOf, Classification) {
  VectorXc v = VectorXc::Zero(4);
  v(0) = 1.0;
  EXPECT_EQ(parity_of(v), Parity::Even);
  v(0) = 0.0;
  v(3) = 1.0;
  EXPECT_EQ(parity_of(v), Parity::Odd);
  v(0) = 0.5;
  EXPECT_EQ(parity_of(v), Parity::Mixed);
}
