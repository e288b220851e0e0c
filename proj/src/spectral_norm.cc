// Copyright 2026 The gapforge Authors
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

#include "gapforge/spectral_norm.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gapforge/error.h"

namespace gapforge {
namespace {

using Apply = std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>;

struct LanczosOutcome {
  bool converged = false;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
};

// Hermitian Lanczos with full reorthogonalization. When `both_ends` is false
// only the largest Ritz value has to converge.
LanczosOutcome lanczos(const Apply& apply, Eigen::Index n, int max_iterations,
                       double tolerance, bool both_ends, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd q(n);
  for (Eigen::Index i = 0; i < n; ++i) q[i] = std::complex<double>(normal(rng), normal(rng));
  q.normalize();

  const int budget = static_cast<int>(std::min<Eigen::Index>(max_iterations, n));
  Eigen::MatrixXcd Q(n, std::min(budget, 64));
  std::vector<double> alpha, beta;
  Eigen::VectorXcd w(n);
  LanczosOutcome out;

  for (int j = 0; j < budget; ++j) {
    if (j >= Q.cols()) Q.conservativeResize(Eigen::NoChange, std::min(2 * j, budget));
    Q.col(j) = q;
    apply(q, w);
    alpha.push_back(q.dot(w).real());
    w -= alpha.back() * q;
    if (j > 0) w -= beta.back() * Q.col(j - 1);
    for (int pass = 0; pass < 2; ++pass) {
      auto basis = Q.leftCols(j + 1);
      Eigen::VectorXcd coeff = basis.adjoint() * w;
      w.noalias() -= basis * coeff;
    }
    double b = w.norm();

    const int m = j + 1;
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub(std::max(m - 1, 0));
    for (int i = 0; i + 1 < m; ++i) sub[i] = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (tri.info() != Eigen::Success) break;
    const Eigen::VectorXd& theta = tri.eigenvalues();
    const Eigen::MatrixXd& S = tri.eigenvectors();
    double res_lo = b * std::abs(S(m - 1, 0));
    double res_hi = b * std::abs(S(m - 1, m - 1));
    double scale = std::max({std::abs(theta[0]), std::abs(theta[m - 1]), 1e-300});
    out.lo = theta[0];
    out.hi = theta[m - 1];
    out.iterations = m;
    bool hi_ok = res_hi <= tolerance * scale;
    bool lo_ok = !both_ends || res_lo <= tolerance * scale;
    if ((hi_ok && lo_ok) || b <= 1e-14 * scale || m == n) {
      out.converged = true;
      return out;
    }
    beta.push_back(b);
    q = w / b;
  }
  return out;
}

NormResult dense_norm(const Eigen::MatrixXcd& A, bool hermitian) {
  NormResult r;
  r.dense = true;
  if (hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw ConvergenceError("dense eigensolver failed");
    }
    r.norm = es.eigenvalues().cwiseAbs().maxCoeff();
    return r;
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
  if (svd.info() != Eigen::Success) {
    throw ConvergenceError("dense SVD failed");
  }
  r.norm = svd.singularValues().maxCoeff();
  return r;
}

}  // namespace

bool is_hermitian(const Eigen::MatrixXcd& A, double tolerance) {
  if (A.rows() != A.cols()) return false;
  double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  return (A - A.adjoint()).cwiseAbs().maxCoeff() <= tolerance * scale;
}

NormResult block_operator_norm(const Eigen::MatrixXcd& A,
                               const NormOptions& options) {
  if (A.rows() != A.cols()) throw DomainError("block must be square");
  const Eigen::Index n = A.rows();
  if (n == 0) return {};
  const bool hermitian = is_hermitian(A);
  if (n < options.dense_below) return dense_norm(A, hermitian);

  const int budget = options.max_iterations_factor * static_cast<int>(n);
  LanczosOutcome out;
  if (hermitian) {
    out = lanczos(
        [&](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) { y.noalias() = A * x; },
        n, budget, options.tolerance, true, options.seed);
  } else {
    Eigen::VectorXcd tmp(n);
    out = lanczos(
        [&](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
          tmp.noalias() = A * x;
          y.noalias() = A.adjoint() * tmp;
        },
        n, budget, options.tolerance, false, options.seed);
  }
  if (out.converged) {
    NormResult r;
    r.iterations = out.iterations;
    r.norm = hermitian ? std::max(std::abs(out.lo), std::abs(out.hi))
                       : std::sqrt(std::max(out.hi, 0.0));
    return r;
  }
  NormResult r = dense_norm(A, hermitian);
  r.iterations = out.iterations;
  r.fallback = true;
  return r;
}

}  // namespace gapforge
