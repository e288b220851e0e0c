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

#include "gapforge/weights.h"

#include <gtest/gtest.h>

#include <set>

#include "gapforge/error.h"
#include "oracles.h"

namespace gapforge {
namespace {

std::vector<std::vector<int>> as_vectors(const std::vector<Weight>& ws) {
  std::vector<std::vector<int>> out;
  for (const auto& w : ws) out.emplace_back(w.entries().begin(), w.entries().end());
  return out;
}

TEST(Weights, TwoQutritExample) {
  std::vector<std::vector<int>> expected = {
      {2, 0, -2}, {2, -1, -1}, {1, 1, -2}, {1, 0, -1}, {0, 0, 0}};
  EXPECT_EQ(as_vectors(enumerate_weights(3, 2)), expected);
  expected.pop_back();
  EXPECT_EQ(as_vectors(enumerate_nontrivial_weights(3, 2)), expected);
}

TEST(Weights, SmallCases) {
  EXPECT_EQ(as_vectors(enumerate_weights(2, 0)),
            (std::vector<std::vector<int>>{{0, 0}}));
  EXPECT_TRUE(enumerate_nontrivial_weights(2, 0).empty());
  EXPECT_EQ(as_vectors(enumerate_weights(2, 3)),
            (std::vector<std::vector<int>>{{3, -3}, {2, -2}, {1, -1}, {0, 0}}));
  EXPECT_EQ(enumerate_nontrivial_weights(2, 5).size(), 5u);
}

TEST(Weights, MatchesBruteForce) {
  for (int t = 0; t <= 50; ++t) {
    EXPECT_EQ(enumerate_weights(2, t).size(), static_cast<std::size_t>(t + 1));
    EXPECT_EQ(as_vectors(enumerate_weights(2, t)),
              oracle::brute_force_weights(2, t));
  }
  for (int d = 3; d <= 5; ++d) {
    for (int t = 0; t <= 4; ++t) {
      EXPECT_EQ(as_vectors(enumerate_weights(d, t)),
                oracle::brute_force_weights(d, t))
          << "d=" << d << " t=" << t;
    }
  }
}

TEST(Weights, Nesting) {
  for (int d = 2; d <= 4; ++d) {
    for (int t = 0; t < 6; ++t) {
      auto small = enumerate_weights(d, t);
      auto big = enumerate_weights(d, t + 1);
      std::set<Weight> bigset(big.begin(), big.end());
      for (const auto& w : small) EXPECT_TRUE(bigset.count(w));
      for (const auto& w : big) {
        EXPECT_LE(weight_one_norm(w), 2 * (t + 1));
        EXPECT_EQ(weight_one_norm(w) % 2, 0);
      }
    }
  }
}

TEST(Weights, OneNorm) {
  EXPECT_EQ(weight_one_norm(Weight{1, 0, -1}), 2);
  EXPECT_EQ(weight_one_norm(Weight{0, 0, 0}), 0);
  EXPECT_EQ(weight_one_norm(Weight{2, 0, -2}), 4);
  EXPECT_EQ(weight_level(Weight{2, -1, -1}), 2);
}

TEST(Weights, WeylDimension) {
  EXPECT_EQ(weyl_dimension(Weight::Trivial(3)), 1u);
  EXPECT_EQ(weyl_dimension(Weight{1, 0, -1}), 8u);
  EXPECT_EQ(weyl_dimension(Weight{2, 0, -2}), 27u);
  EXPECT_EQ(oracle::count_gt_patterns({4, 2, 0}), 27);
  for (int d = 2; d <= 5; ++d) {
    for (const auto& w : enumerate_weights(d, 3)) {
      std::vector<int> top(w.entries().begin(), w.entries().end());
      int shift = -top.back();
      for (int& x : top) x += shift;
      EXPECT_EQ(static_cast<long long>(weyl_dimension(w)),
                oracle::count_gt_patterns(top));
      EXPECT_EQ(weyl_dimension(w), weyl_dimension(w.conjugate()));
      EXPECT_EQ(weyl_dimension(w) == 1, w.is_trivial());
    }
  }
}

TEST(Weights, AdjointDecomposition) {
  for (int d = 2; d <= 6; ++d) {
    auto ws = enumerate_weights(d, 1);
    ASSERT_EQ(ws.size(), 2u);
    std::uint64_t total = 0;
    for (const auto& w : ws) total += weyl_dimension(w);
    EXPECT_EQ(total, static_cast<std::uint64_t>(d * d));
  }
}

TEST(Weights, DimensionOverflow) {
  std::vector<int> big(20, 0);
  big.front() = 1'000'000;
  big.back() = -1'000'000;
  EXPECT_THROW(weyl_dimension(Weight(big)), ResourceError);
}

TEST(Weights, FrobeniusSchur) {
  EXPECT_EQ(frobenius_schur(Weight{1, -1}), 1);
  EXPECT_EQ(frobenius_schur(Weight{1, 0, -1}), 1);
  EXPECT_EQ(frobenius_schur(Weight{2, -1, -1}), 0);
  EXPECT_EQ(Weight({2, -1, -1}).conjugate(), Weight({1, 1, -2}));
  for (int t = 0; t <= 10; ++t) {
    for (const auto& w : enumerate_weights(2, t)) {
      EXPECT_EQ(frobenius_schur(w), 1);
    }
  }
  auto meta = make_irrep_meta(Weight{2, 0, -2});
  EXPECT_EQ(meta.dim, 27u);
  EXPECT_EQ(meta.fs_indicator, 1);
  EXPECT_EQ(meta.one_norm, 4);
}

TEST(Weights, Rejections) {
  EXPECT_THROW(enumerate_weights(1, 2), DomainError);
  EXPECT_THROW(enumerate_weights(2, -1), DomainError);
  EXPECT_THROW(Weight({1, 2, -3}), DomainError);
  EXPECT_THROW(Weight({1, 0}), DomainError);
  EXPECT_THROW(Weight({0}), DomainError);
}

}  // namespace
}  // namespace gapforge
