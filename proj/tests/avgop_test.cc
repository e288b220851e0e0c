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

#include "gapforge/avgop.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gapforge/error.h"
#include "oracles.h"

namespace gapforge {
namespace {

using Mat = Eigen::MatrixXcd;

// Computed by the symmetric-power oracle (tests/oracles.h) in double
// precision for haar_random_gateset(2, 2, 7).
constexpr double kGoldenGap10 = 0.052486792971637941;

GateSet identity_pair(int d) {
  return GateSet(d, {{"I", Mat::Identity(d, d)}, {"I", Mat::Identity(d, d)}},
                 false);
}

GateSet diagonal_pair() {
  Mat Z = Mat::Zero(2, 2);
  Z(0, 0) = Complex(0, 1);
  Z(1, 1) = Complex(0, -1);
  return GateSet(2, {{"Z", Z}}, true);
}

std::vector<Eigen::Matrix2cd> generators(const GateSet& s) {
  std::vector<Eigen::Matrix2cd> out;
  for (const Gate& g : s.gates()) out.push_back(g.matrix);
  return out;
}

TEST(AveragingBlock, IdentityPair) {
  GateSet s = identity_pair(3);
  for (const Weight& w : enumerate_nontrivial_weights(3, 2)) {
    Mat A = averaging_block(w, s);
    EXPECT_LT((A - Mat::Identity(A.rows(), A.cols())).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(AveragingBlock, DiagonalPairAdjoint) {
  Mat A = averaging_block(Weight{1, -1}, diagonal_pair());
  Eigen::SelfAdjointEigenSolver<Mat> es(A);
  EXPECT_NEAR(es.eigenvalues()[0], -1, 1e-12);
  EXPECT_NEAR(es.eigenvalues()[1], -1, 1e-12);
  EXPECT_NEAR(es.eigenvalues()[2], 1, 1e-12);
  EXPECT_LT((A - A.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(AveragingBlock, SymmetricPairIsHermitian) {
  GateSet s = haar_random_gateset(3, 2, 3);
  Mat A = averaging_block(Weight{2, 0, -2}, s);
  EXPECT_LT((A - A.adjoint()).cwiseAbs().maxCoeff(), 1e-8);
  // Explicit inverses listed without the flag give the same block.
  std::vector<Gate> full;
  for (const Gate& g : s.gates()) full.push_back(g);
  for (const Gate& g : s.gates()) full.push_back({g.label + "'", g.matrix.adjoint()});
  GateSet explicit_set(3, full, false);
  EXPECT_TRUE(explicit_set.inverse_closed());
  Mat B = averaging_block(Weight{2, 0, -2}, explicit_set);
  EXPECT_LT((A - B).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(GapAtScale, DegenerateSets) {
  for (int t : {1, 3, 6}) {
    EXPECT_NEAR(gap_at_scale(identity_pair(2), t).gap, 0, 1e-12);
    EXPECT_NEAR(gap_at_scale(diagonal_pair(), t).gap, 0, 1e-12);
  }
  EXPECT_NEAR(gap_at_scale(identity_pair(3), 2).gap, 0, 1e-12);
}

TEST(GapAtScale, GoldenHaarPair) {
  GateSet s = haar_random_gateset(2, 2, 7);
  GapReport r = gap_at_scale(s, 10);
  EXPECT_NEAR(r.gap, kGoldenGap10, 1e-9);
  EXPECT_NEAR(r.gap, oracle::dense_gap_d2(generators(s), 10), 1e-10);
  EXPECT_GT(r.gap, 0.05);
  ASSERT_EQ(r.per_weight.size(), 10u);
  double worst = 0;
  for (const auto& b : r.per_weight) worst = std::max(worst, b.norm);
  EXPECT_DOUBLE_EQ(r.gap, 1 - worst);
  EXPECT_EQ(r.worst_weight, Weight({6, -6}));
}

TEST(GapAtScale, MonotoneAndBounded) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    GateSet s = haar_random_gateset(2, 2, seed);
    double prev = 2;
    for (int t = 1; t <= 12; ++t) {
      double g = gap_at_scale(s, t).gap;
      EXPECT_GE(g, -1e-8);
      EXPECT_LE(g, 1 + 1e-8);
      EXPECT_LE(g, prev + 1e-8);
      prev = g;
    }
  }
}

TEST(GapAtScale, ConjugationAndOrderInvariance) {
  GateSet s = haar_random_gateset(3, 2, 21);
  std::mt19937_64 rng(99);
  Mat V = oracle::random_unitary(3, rng);
  std::vector<Gate> conj, reversed;
  for (const Gate& g : s.gates()) conj.push_back({g.label, V * g.matrix * V.adjoint()});
  for (auto it = s.gates().rbegin(); it != s.gates().rend(); ++it) reversed.push_back(*it);
  GapReport a = gap_at_scale(s, 2);
  GapReport b = gap_at_scale(GateSet(3, conj, true), 2);
  GapReport c = gap_at_scale(GateSet(3, reversed, true), 2);
  ASSERT_EQ(a.per_weight.size(), b.per_weight.size());
  for (std::size_t i = 0; i < a.per_weight.size(); ++i) {
    EXPECT_NEAR(a.per_weight[i].norm, b.per_weight[i].norm, 1e-8);
    EXPECT_NEAR(a.per_weight[i].norm, c.per_weight[i].norm, 1e-12);
  }
  EXPECT_EQ(a.worst_weight, c.worst_weight);
}

TEST(GapAtScale, SymmetryRequired) {
  GateSet s = haar_random_gateset(2, 2, 4);
  GateSet one_sided(2, s.gates(), false);
  EXPECT_THROW(gap_at_scale(one_sided, 3), DomainError);
  GapOptions opts;
  opts.auto_symmetrize = true;
  EXPECT_NEAR(gap_at_scale(one_sided, 3, opts).gap, gap_at_scale(s, 3).gap,
              1e-12);
  EXPECT_THROW(gap_at_scale(s, 0), DomainError);
}

TEST(GapAtScale, ThreadCountDoesNotMatter) {
  GateSet s = haar_random_gateset(3, 2, 8);
  GapOptions serial, parallel;
  serial.threads = 1;
  parallel.threads = 4;
  GapReport a = gap_at_scale(s, 3, serial);
  GapReport b = gap_at_scale(s, 3, parallel);
  for (std::size_t i = 0; i < a.per_weight.size(); ++i) {
    EXPECT_NEAR(a.per_weight[i].norm, b.per_weight[i].norm, 1e-12);
  }
}

TEST(GapAtScale, ProgressCallback) {
  GapOptions opts;
  std::size_t calls = 0;
  opts.progress = [&](const BlockProgress& p) {
    ++calls;
    EXPECT_EQ(p.total, 4u);
  };
  gap_at_scale(haar_random_gateset(2, 2, 1), 4, opts);
  EXPECT_EQ(calls, 4u);
}

TEST(ConvolutionSquare, IdentityPair) {
  ConvolutionGap c = convolution_square_gap(identity_pair(2), 3);
  EXPECT_NEAR(c.gap_square, 0, 1e-12);
  EXPECT_LE(c.violation, 1e-8);
}

TEST(ConvolutionSquare, SymmetricIdentity) {
  GateSet s = haar_random_gateset(2, 2, 7);
  ConvolutionGap c = convolution_square_gap(s, 6);
  EXPECT_NEAR(c.gap_square, 1 - (1 - c.gap) * (1 - c.gap), 1e-12);
  EXPECT_LE(c.violation, 1e-8);
}

TEST(ConvolutionSquare, SandwichForNonSymmetricSet) {
  for (std::uint64_t seed : {2, 5, 13}) {
    GateSet s(2, haar_random_gateset(2, 3, seed).gates(), false);
    ConvolutionGap c = convolution_square_gap(s, 5);
    EXPECT_LE(c.violation, 1e-8);
    EXPECT_GE(c.gap_square + 1e-8, c.gap);
    EXPECT_GE(c.gap + 1e-8, c.gap_square / 2);
  }
}

TEST(ConvergenceProfile, DominatedByGapPower) {
  GateSet s = haar_random_gateset(2, 2, 3);
  const double gap = gap_at_scale(s, 4).gap;
  auto profile = convergence_profile(s, 4, 10);
  ASSERT_EQ(profile.size(), 10u);
  EXPECT_NEAR(profile[0], 1 - gap, 1e-12);
  for (int l = 1; l <= 10; ++l) {
    EXPECT_LE(profile[l - 1], std::pow(1 - gap, l) + 1e-8);
  }
  for (double v : convergence_profile(identity_pair(2), 3, 5)) {
    EXPECT_NEAR(v, 1, 1e-12);
  }
}

TEST(BlockOperator, KeysAreNontrivialWeights) {
  BlockOperator op = build_block_operator(haar_random_gateset(3, 2, 1), 2);
  EXPECT_EQ(op.blocks.size(), 4u);
  EXPECT_FALSE(op.blocks.count(Weight::Trivial(3)));
  for (const auto& [w, A] : op.blocks) {
    EXPECT_EQ(static_cast<std::uint64_t>(A.rows()), weyl_dimension(w));
    EXPECT_LE(oracle::op_norm(A), 1 + 1e-8);
  }
}

}  // namespace
}  // namespace gapforge
