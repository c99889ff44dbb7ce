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

// Dense complex linear algebra for the operator algebra of the game.
//
// Everything here is templated on the real scalar and accepts arbitrary
// Eigen expressions; results are evaluated dense matrices.  The Hermitian
// eigensolver is a cyclic Jacobi iteration on the real symmetric embedding
//
//     [ Re M  -Im M ]
//     [ Im M   Re M ]
//
// whose spectrum is the spectrum of M with every eigenvalue doubled.  Each
// doubled pair is folded back into one complex eigenvector.

#ifndef QGAMBLE_NUMERICS_HPP
#define QGAMBLE_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Jacobi>

#include "qgamble/errors.hpp"

namespace qgamble {

using Eigen::Index;

template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using MatrixXc = ComplexMatrix<double>;
using VectorXc = ComplexVector<double>;

inline constexpr double kConstructionTolerance = 1e-12;
inline constexpr double kEigenTolerance = 1e-10;
inline constexpr Index kMaxEigenDim = 512;

enum class Parity { Even, Odd, Mixed };

inline std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::Even:
      return "even";
    case Parity::Odd:
      return "odd";
    case Parity::Mixed:
      return "mixed";
  }
  return "mixed";
}

namespace detail {

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const auto z = m(i, j);
      if (!std::isfinite(std::real(z)) || !std::isfinite(std::imag(z))) {
        throw InvalidInput(std::string(what) + ": non-finite entry at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw InvalidInput(std::string(what) + ": expected a non-empty square matrix, got " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  require_finite(m, what);
}

template <typename DA, typename DB>
void require_same_dim(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                      const char* what) {
  require_square(a, what);
  require_square(b, what);
  if (a.rows() != b.rows()) {
    throw InvalidInput(std::string(what) + ": dimension mismatch " + std::to_string(a.rows()) +
                       " vs " + std::to_string(b.rows()));
  }
}

}  // namespace detail

template <typename DA, typename DB>
ComplexMatrix<typename DA::RealScalar> multiply(const Eigen::MatrixBase<DA>& a,
                                                const Eigen::MatrixBase<DB>& b) {
  detail::require_same_dim(a, b, "multiply");
  return a * b;
}

template <typename Derived>
ComplexMatrix<typename Derived::RealScalar> adjoint(const Eigen::MatrixBase<Derived>& a) {
  detail::require_square(a, "adjoint");
  return a.adjoint();
}

/// a·b − b·a.
template <typename DA, typename DB>
ComplexMatrix<typename DA::RealScalar> commutator(const Eigen::MatrixBase<DA>& a,
                                                  const Eigen::MatrixBase<DB>& b) {
  detail::require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

/// a·b − b·a accumulated in long double and rounded once per entry.
/// Both products of a near-canonical pair are large and nearly cancel, so
/// the plain version can lose an extra ulp of the larger entry.
template <typename DA, typename DB>
ComplexMatrix<typename DA::RealScalar> extended_commutator(const Eigen::MatrixBase<DA>& a,
                                                           const Eigen::MatrixBase<DB>& b) {
  using Real = typename DA::RealScalar;
  using Wide = std::complex<long double>;
  detail::require_same_dim(a, b, "extended_commutator");
  const auto wa = a.template cast<Wide>().eval();
  const auto wb = b.template cast<Wide>().eval();
  const ComplexMatrix<long double> wide = wa * wb - wb * wa;
  return wide.template cast<std::complex<Real>>();
}

/// a·b + b·a.
template <typename DA, typename DB>
ComplexMatrix<typename DA::RealScalar> anticommutator(const Eigen::MatrixBase<DA>& a,
                                                      const Eigen::MatrixBase<DB>& b) {
  detail::require_same_dim(a, b, "anticommutator");
  return a * b + b * a;
}

/// Induced infinity norm (maximum absolute row sum).
template <typename Derived>
typename Derived::RealScalar inf_norm(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

/// max |M(m,n) − conj(M(n,m))|.
template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  detail::require_square(m, "hermiticity_defect");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m,
                  typename Derived::RealScalar tol = kConstructionTolerance) {
  return hermiticity_defect(m) <= tol;
}

/// ⟨state| m |state⟩ for a unit-norm state.
template <typename DV, typename DM>
std::complex<typename DM::RealScalar> expectation(const Eigen::MatrixBase<DV>& state,
                                                  const Eigen::MatrixBase<DM>& m) {
  using Real = typename DM::RealScalar;
  detail::require_square(m, "expectation");
  detail::require_finite(state, "expectation");
  if (state.cols() != 1 || state.rows() != m.rows()) {
    throw InvalidInput("expectation: state length " + std::to_string(state.rows()) +
                       " does not match operator dimension " + std::to_string(m.rows()));
  }
  const Real norm = state.norm();
  if (std::abs(norm - Real(1)) > Real(kConstructionTolerance)) {
    throw InvalidInput("expectation: state is not normalized (norm " + std::to_string(norm) +
                       ")");
  }
  return state.dot(m * state);
}

/// Parity of a vector over the number basis: even if every odd-index
/// component is below `tol`, odd if every even-index component is.
template <typename Derived>
Parity parity_of(const Eigen::MatrixBase<Derived>& v,
                 typename Derived::RealScalar tol = kEigenTolerance) {
  typename Derived::RealScalar even = 0, odd = 0;
  for (Index i = 0; i < v.size(); ++i) {
    auto& slot = (i % 2 == 0) ? even : odd;
    slot = std::max(slot, static_cast<typename Derived::RealScalar>(std::abs(v(i))));
  }
  if (odd <= tol) return Parity::Even;
  if (even <= tol) return Parity::Odd;
  return Parity::Mixed;
}

template <typename Real>
struct SpectralDecomposition {
  RealVector<Real> eigenvalues;       // ascending
  ComplexMatrix<Real> eigenvectors;   // column k pairs with eigenvalue k
  std::vector<Parity> parity;

  Index size() const { return eigenvalues.size(); }
};

// Worst-case violations of the decomposition invariants.
template <typename Real>
struct SpectralDefects {
  Real orthonormality = 0;  // max |⟨v_j, v_k⟩ − δ_jk|
  Real residual = 0;        // max ‖M v_k − λ_k v_k‖₂
  Real completeness = 0;    // ‖Σ v_k v_k† − I‖∞
};

template <typename Derived, typename Real>
SpectralDefects<Real> spectral_defects(const Eigen::MatrixBase<Derived>& m,
                                       const SpectralDecomposition<Real>& d) {
  const Index n = m.rows();
  const ComplexMatrix<Real>& v = d.eigenvectors;
  SpectralDefects<Real> out;
  out.orthonormality =
      (v.adjoint() * v - ComplexMatrix<Real>::Identity(d.size(), d.size())).cwiseAbs().maxCoeff();
  for (Index k = 0; k < d.size(); ++k) {
    out.residual = std::max(out.residual, (m * v.col(k) - d.eigenvalues(k) * v.col(k)).norm());
  }
  out.completeness = inf_norm(v * v.adjoint() - ComplexMatrix<Real>::Identity(n, n));
  return out;
}

namespace detail {

// Cyclic Jacobi sweeps on a real symmetric matrix.  On return `s` is
// diagonal to working precision and `v` holds the rotations applied.
template <typename Real>
bool jacobi_sweeps(Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>& s,
                   Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>& v, int max_sweeps) {
  const Index n = s.rows();
  v.setIdentity(n, n);
  const Real scale = s.norm();
  if (scale == Real(0)) return true;
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Real off = 0;
    for (Index q = 1; q < n; ++q) {
      for (Index p = 0; p < q; ++p) off += s(p, q) * s(p, q);
    }
    if (std::sqrt(Real(2) * off) <= eps * scale) return true;
    for (Index p = 0; p + 1 < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        if (s(p, q) == Real(0)) continue;
        Eigen::JacobiRotation<Real> rot;
        rot.makeJacobi(s, p, q);
        s.applyOnTheLeft(p, q, rot.adjoint());
        s.applyOnTheRight(p, q, rot);
        v.applyOnTheRight(p, q, rot);
        s(p, q) = s(q, p) = Real(0);
      }
    }
  }
  return false;
}

// Picks `count` orthonormal columns spanning the column space of
// `candidates`, greedily taking the largest remaining residual each step.
template <typename Real>
ComplexMatrix<Real> pivoted_gram_schmidt(const ComplexMatrix<Real>& candidates, Index count) {
  const Index n = candidates.rows();
  ComplexMatrix<Real> basis(n, count);
  std::vector<bool> used(static_cast<std::size_t>(candidates.cols()), false);
  for (Index k = 0; k < count; ++k) {
    Index best = -1;
    Real best_norm = -1;
    ComplexVector<Real> best_vec;
    for (Index j = 0; j < candidates.cols(); ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      ComplexVector<Real> r = candidates.col(j);
      for (int pass = 0; pass < 2; ++pass) {
        for (Index i = 0; i < k; ++i) r -= basis.col(i) * basis.col(i).dot(r);
      }
      const Real nr = r.norm();
      if (nr > best_norm) {
        best = j;
        best_norm = nr;
        best_vec = std::move(r);
      }
    }
    if (best < 0 || best_norm < Real(0.25)) {
      throw ConvergenceError("hermitian_eigen: could not fold doubled eigenpairs", best_norm);
    }
    used[static_cast<std::size_t>(best)] = true;
    basis.col(k) = best_vec / best_norm;
  }
  return basis;
}

template <typename Real>
void fix_phase(Eigen::Ref<ComplexVector<Real>> v) {
  constexpr Real kPhaseFloor = Real(1e-8);
  for (Index i = 0; i < v.size(); ++i) {
    const Real a = std::abs(v(i));
    if (a > kPhaseFloor) {
      v *= std::conj(v(i)) / a;
      v(i) = std::complex<Real>(std::real(v(i)), Real(0));
      return;
    }
  }
}

template <typename Derived>
SpectralDecomposition<typename Derived::RealScalar> hermitian_eigen_impl(
    const Eigen::MatrixBase<Derived>& m, int depth) {
  using Real = typename Derived::RealScalar;
  using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  constexpr int kMaxSweeps = 64;
  constexpr int kMaxRefineDepth = 3;

  const Index n = m.rows();
  RealMatrix s(2 * n, 2 * n);
  s.topLeftCorner(n, n) = m.real();
  s.topRightCorner(n, n) = -m.imag();
  s.bottomLeftCorner(n, n) = m.imag();
  s.bottomRightCorner(n, n) = m.real();
  s = (s + s.transpose()).eval() / Real(2);

  RealMatrix v;
  if (!jacobi_sweeps(s, v, kMaxSweeps)) {
    Real off = (s - RealMatrix(s.diagonal().asDiagonal())).norm();
    throw ConvergenceError("hermitian_eigen: Jacobi did not converge", off);
  }

  std::vector<Index> order(static_cast<std::size_t>(2 * n));
  std::iota(order.begin(), order.end(), Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return s(a, a) < s(b, b); });

  const Real scale = std::max(Real(1), s.diagonal().cwiseAbs().maxCoeff());
  const Real cluster_gap = Real(1e-8) * scale;

  ComplexMatrix<Real> vectors(n, n);
  Index filled = 0;
  std::size_t begin = 0;
  while (begin < order.size()) {
    std::size_t end = begin + 1;
    while (end < order.size() && s(order[end], order[end]) - s(order[end - 1], order[end - 1]) <
                                     cluster_gap) {
      ++end;
    }
    const Index count = static_cast<Index>(end - begin);
    if (count % 2 != 0) {
      throw ConvergenceError("hermitian_eigen: unpaired eigenvalue in real embedding",
                             s(order[begin], order[begin]));
    }
    ComplexMatrix<Real> candidates(n, count);
    for (Index j = 0; j < count; ++j) {
      const auto col = v.col(order[begin + static_cast<std::size_t>(j)]);
      for (Index i = 0; i < n; ++i) candidates(i, j) = std::complex<Real>(col(i), col(n + i));
    }
    const Index k = count / 2;
    ComplexMatrix<Real> basis = pivoted_gram_schmidt(candidates, k);

    // Rayleigh–Ritz inside near-degenerate clusters so that each column is an
    // eigenvector rather than a mixture of close ones.
    const Real spread = s(order[end - 1], order[end - 1]) - s(order[begin], order[begin]);
    if (k > 1 && spread > Real(1e-14) * scale && depth < kMaxRefineDepth) {
      ComplexMatrix<Real> h = basis.adjoint() * m * basis;
      const Real centre = std::real(h.trace()) / Real(k);
      h = (h - centre * ComplexMatrix<Real>::Identity(k, k)) / spread;
      h = (h + h.adjoint()).eval() / Real(2);
      basis = basis * hermitian_eigen_impl(h, depth + 1).eigenvectors;
    }
    vectors.middleCols(filled, k) = basis;
    filled += k;
    begin = end;
  }

  RealVector<Real> values(n);
  for (Index k = 0; k < n; ++k) values(k) = std::real(vectors.col(k).dot(m * vectors.col(k)));

  std::vector<Index> rank(static_cast<std::size_t>(n));
  std::iota(rank.begin(), rank.end(), Index(0));
  std::stable_sort(rank.begin(), rank.end(), [&](Index a, Index b) { return values(a) < values(b); });

  SpectralDecomposition<Real> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  out.parity.reserve(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) {
    const Index src = rank[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = values(src);
    out.eigenvectors.col(k) = vectors.col(src);
    fix_phase<Real>(out.eigenvectors.col(k));
    out.parity.push_back(parity_of(out.eigenvectors.col(k)));
  }
  return out;
}

}  // namespace detail

/// Eigen-decomposition of a Hermitian matrix.
///
/// Eigenvalues come back ascending; each eigenvector is unit norm with its
/// first component above 1e-8 in magnitude made real and positive.  The
/// result is checked against `tol` for orthonormality, residual
/// (scaled by 1 + ‖M‖∞) and completeness before it is returned.
template <typename Derived>
SpectralDecomposition<typename Derived::RealScalar> hermitian_eigen(
    const Eigen::MatrixBase<Derived>& m, typename Derived::RealScalar tol = kEigenTolerance) {
  using Real = typename Derived::RealScalar;
  detail::require_square(m, "hermitian_eigen");
  if (m.rows() > kMaxEigenDim) {
    throw InvalidInput("hermitian_eigen: dimension " + std::to_string(m.rows()) +
                       " exceeds ceiling " + std::to_string(kMaxEigenDim));
  }
  const Real defect = hermiticity_defect(m);
  if (defect > Real(kConstructionTolerance)) {
    throw InvalidInput("hermitian_eigen: matrix is not Hermitian (defect " +
                       std::to_string(defect) + ")");
  }
  const ComplexMatrix<Real> h = m;
  auto out = detail::hermitian_eigen_impl(h, 0);

  const auto d = spectral_defects(h, out);
  const Real residual_bound = tol * (Real(1) + inf_norm(h));
  if (d.residual > residual_bound || d.orthonormality > tol || d.completeness > tol) {
    throw ConvergenceError("hermitian_eigen: decomposition misses tolerance",
                           std::max({d.residual, d.orthonormality, d.completeness}));
  }
  return out;
}

}  // namespace qgamble

#endif  // QGAMBLE_NUMERICS_HPP
