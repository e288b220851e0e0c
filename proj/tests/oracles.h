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

// Independent reference implementations used by the tests. None of these
// touch the library code paths they check.

#ifndef GAPFORGE_TESTS_ORACLES_H_
#define GAPFORGE_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace gapforge::oracle {

// Every nonincreasing zero-sum vector in [-t, t]^d with positive part <= t,
// lexicographically descending.
inline std::vector<std::vector<int>> brute_force_weights(int d, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(d, -t);
  for (;;) {
    bool ok = std::accumulate(v.begin(), v.end(), 0) == 0;
    for (int i = 0; ok && i + 1 < d; ++i) ok = v[i] >= v[i + 1];
    int pos = 0;
    for (int x : v) pos += std::max(x, 0);
    if (ok && pos <= t) out.push_back(v);
    int i = d - 1;
    while (i >= 0 && v[i] == t) v[i--] = -t;
    if (i < 0) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Counts Gelfand-Tsetlin patterns with the given top row by direct recursion
// over interlacing rows.
inline long long count_gt_patterns(const std::vector<int>& top) {
  if (top.size() <= 1) return 1;
  long long total = 0;
  std::vector<int> row(top.size() - 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == row.size()) {
      total += count_gt_patterns(row);
      return;
    }
    for (int v = top[i + 1]; v <= top[i]; ++v) {
      row[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

inline double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Sym^n of an SU(2) matrix in the orthonormal monomial basis
// sqrt(C(n,k)) x^{n-k} y^k. Sym^{2a} is the PU(2) irrep of weight (a,-a).
inline Eigen::MatrixXcd symmetric_power(const Eigen::Matrix2cd& U, int n) {
  using C = std::complex<double>;
  const C a = U(0, 0), b = U(0, 1), c = U(1, 0), d = U(1, 1);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<C> p1(n - k + 1), p2(k + 1);
    for (int i = 0; i <= n - k; ++i) {
      p1[i] = binomial(n - k, i) * std::pow(a, n - k - i) * std::pow(c, i);
    }
    for (int i = 0; i <= k; ++i) {
      p2[i] = binomial(k, i) * std::pow(b, k - i) * std::pow(d, i);
    }
    for (int i = 0; i <= n - k; ++i) {
      for (int j = 0; j <= k; ++j) {
        M(i + j, k) += p1[i] * p2[j] * std::sqrt(binomial(n, k)) /
                       std::sqrt(binomial(n, i + j));
      }
    }
  }
  return M;
}

inline Eigen::Matrix2cd to_su2(const Eigen::Matrix2cd& U) {
  return U / std::sqrt(U.determinant());
}

// gap_t of a symmetric d=2 set given by its generators, through symmetric
// powers and a dense Hermitian eigensolve.
inline double dense_gap_d2(const std::vector<Eigen::Matrix2cd>& gens, int t) {
  double worst = 0;
  for (int a = 1; a <= t; ++a) {
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(2 * a + 1, 2 * a + 1);
    for (const auto& U : gens) {
      Eigen::MatrixXcd P = symmetric_power(to_su2(U), 2 * a);
      A += P + P.adjoint();
    }
    A /= 2.0 * gens.size();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
    worst = std::max(worst, es.eigenvalues().cwiseAbs().maxCoeff());
  }
  return 1 - worst;
}

inline Eigen::MatrixXcd random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::MatrixXcd Z(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) Z(i, j) = {n(rng), n(rng)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Z);
  Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
  for (int k = 0; k < d; ++k) {
    auto r = qr.matrixQR()(k, k);
    Q.col(k) *= r / std::abs(r);
  }
  return Q;
}

inline double op_norm(const Eigen::MatrixXcd& A) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  return svd.singularValues()(0);
}

}  // namespace gapforge::oracle

#endif  // GAPFORGE_TESTS_ORACLES_H_
