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

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"

namespace gapforge {
namespace {

using Mat = Eigen::MatrixXcd;

Mat random_hermitian(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Mat A(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A(i, j) = {g(rng), g(rng)};
  }
  return (A + A.adjoint()) * 0.5;
}

double dense_abs_max(const Mat& A) {
  Eigen::SelfAdjointEigenSolver<Mat> es(A, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

TEST(BlockNorm, Trivial) {
  EXPECT_DOUBLE_EQ(block_operator_norm(Mat::Identity(5, 5)).norm, 1.0);
  EXPECT_DOUBLE_EQ(block_operator_norm(Mat::Zero(5, 5)).norm, 0.0);
  NormOptions lanczos;
  lanczos.dense_below = 0;
  EXPECT_NEAR(block_operator_norm(Mat::Identity(40, 40), lanczos).norm, 1.0,
              1e-14);
  EXPECT_NEAR(block_operator_norm(Mat::Zero(40, 40), lanczos).norm, 0.0, 1e-14);
}

TEST(BlockNorm, LanczosMatchesDense) {
  NormOptions lanczos;
  lanczos.dense_below = 0;
  for (std::uint64_t seed : {1, 2, 3}) {
    Mat A = random_hermitian(100, seed);
    NormResult r = block_operator_norm(A, lanczos);
    EXPECT_FALSE(r.dense);
    EXPECT_NEAR(r.norm, dense_abs_max(A), 1e-9 * dense_abs_max(A));
  }
  Mat big = random_hermitian(700, 9);
  NormResult r = block_operator_norm(big);
  EXPECT_FALSE(r.dense);
  EXPECT_NEAR(r.norm, dense_abs_max(big), 1e-9 * dense_abs_max(big));
}

TEST(BlockNorm, NegativeDominantEigenvalue) {
  Mat A = Mat::Zero(60, 60);
  for (int i = 0; i < 60; ++i) A(i, i) = 0.5 * i / 60.0;
  A(7, 7) = -0.95;
  NormOptions lanczos;
  lanczos.dense_below = 0;
  EXPECT_NEAR(block_operator_norm(A, lanczos).norm, 0.95, 1e-12);
}

TEST(BlockNorm, NonHermitianUsesSingularValues) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  Mat A(80, 80);
  for (int i = 0; i < 80; ++i) {
    for (int j = 0; j < 80; ++j) A(i, j) = {g(rng), g(rng)};
  }
  NormOptions lanczos;
  lanczos.dense_below = 0;
  const double expected = oracle::op_norm(A);
  EXPECT_NEAR(block_operator_norm(A, lanczos).norm, expected, 1e-9 * expected);
  EXPECT_NEAR(block_operator_norm(A).norm, expected, 1e-9 * expected);
}

TEST(BlockNorm, Deterministic) {
  Mat A = random_hermitian(600, 12);
  NormResult a = block_operator_norm(A);
  NormResult b = block_operator_norm(A);
  EXPECT_EQ(a.norm, b.norm);
  EXPECT_EQ(a.iterations, b.iterations);
}

}  // namespace
}  // namespace gapforge
