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

#include "qgamble/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qgamble {

namespace {

MatrixXc gather(const MatrixXc& m, const std::vector<Index>& idx) {
  const Index k = static_cast<Index>(idx.size());
  MatrixXc out(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) out(i, j) = m(idx[i], idx[j]);
  }
  return out;
}

struct Eigenpair {
  double value;
  Parity parity;
  VectorXc vector;
};

void append_block(const MatrixXc& block, const std::vector<Index>& idx, Index dim, Parity parity,
                  std::vector<Eigenpair>& out) {
  if (idx.empty()) return;
  const auto decomp = hermitian_eigen(block);
  for (Index k = 0; k < decomp.size(); ++k) {
    VectorXc v = VectorXc::Zero(dim);
    for (Index i = 0; i < decomp.size(); ++i) v(idx[i]) = decomp.eigenvectors(i, k);
    out.push_back({decomp.eigenvalues(k), parity, std::move(v)});
  }
}

double real_expectation(const VectorXc& state, const MatrixXc& m) {
  return std::real(expectation(state, m));
}

}  // namespace

ParityBlocks parity_blocks(const MatrixXc& pc, double tol) {
  detail::require_square(pc, "parity_blocks");
  const Index dim = pc.rows();
  for (Index m = 0; m < dim; ++m) {
    for (Index n = 0; n < dim; ++n) {
      const Index gap = std::abs(m - n);
      if (gap != 0 && gap != 2 && std::abs(pc(m, n)) > tol) {
        throw StructuralError("parity_blocks: unexpected coupling at (" + std::to_string(m) + "," +
                              std::to_string(n) + ")");
      }
    }
  }
  ParityBlocks out;
  for (Index i = 0; i < dim; ++i) (i % 2 == 0 ? out.even_indices : out.odd_indices).push_back(i);
  out.even = gather(pc, out.even_indices);
  out.odd = gather(pc, out.odd_indices);
  return out;
}

double correlation_value(const VectorXc& state, const MatrixXc& pi1, const MatrixXc& pi2,
                         const MatrixXc& pc) {
  return real_expectation(state, pc) -
         real_expectation(state, pi1) * real_expectation(state, pi2);
}

std::vector<int> sign_classification(const std::vector<double>& eigenvalues) {
  double largest = 0.0;
  for (double v : eigenvalues) largest = std::max(largest, std::abs(v));
  const double band = kSignZeroBand * std::max(1.0, largest);
  std::vector<int> out;
  out.reserve(eigenvalues.size());
  for (double v : eigenvalues) out.push_back(std::abs(v) <= band ? 0 : (v > 0 ? 1 : -1));
  return out;
}

std::vector<int> sign_classification(const CorrelationReport& report) {
  std::vector<double> values;
  values.reserve(report.rows.size());
  for (const auto& row : report.rows) values.push_back(row.eigenvalue);
  return sign_classification(values);
}

CorrelationReport correlation_spectrum(const GameSpace& gs) {
  const auto ops = build_operators(gs);
  const Index dim = gs.dim();

  std::vector<Eigenpair> pairs;
  if (gs.mode() == BoundaryMode::Finite) {
    const auto blocks = parity_blocks(ops.precorrelation);
    append_block(blocks.even, blocks.even_indices, dim, Parity::Even, pairs);
    append_block(blocks.odd, blocks.odd_indices, dim, Parity::Odd, pairs);
  } else {
    const auto decomp = hermitian_eigen(ops.precorrelation);
    for (Index k = 0; k < decomp.size(); ++k) {
      pairs.push_back({decomp.eigenvalues(k), decomp.parity[static_cast<std::size_t>(k)],
                       decomp.eigenvectors.col(k)});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Eigenpair& a, const Eigenpair& b) { return a.value < b.value; });

  const MatrixXc pi1_sq = ops.pi1 * ops.pi1;
  const MatrixXc pi2_sq = ops.pi2 * ops.pi2;

  CorrelationReport report{gs, {}, MatrixXc(dim, dim)};
  report.rows.reserve(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const VectorXc& v = pairs[k].vector;
    CorrelationRow row;
    row.eigenvalue = pairs[k].value;
    row.parity = pairs[k].parity;
    row.exp_pi1 = real_expectation(v, ops.pi1);
    row.exp_pi2 = real_expectation(v, ops.pi2);
    row.sigma1 = std::sqrt(std::max(0.0, real_expectation(v, pi1_sq) - row.exp_pi1 * row.exp_pi1));
    row.sigma2 = std::sqrt(std::max(0.0, real_expectation(v, pi2_sq) - row.exp_pi2 * row.exp_pi2));
    row.correlation = correlation_value(v, ops.pi1, ops.pi2, ops.precorrelation);
    if (row.sigma1 * row.sigma2 > kPearsonFloor) {
      row.pearson = row.correlation / (row.sigma1 * row.sigma2);
    }
    report.eigenvectors.col(static_cast<Index>(k)) = v;
    report.rows.push_back(row);
  }
  const auto signs = sign_classification(report);
  for (std::size_t k = 0; k < signs.size(); ++k) report.rows[k].sign_class = signs[k];
  return report;
}

}  // namespace qgamble
