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

#ifndef GAPFORGE_AVGOP_H_
#define GAPFORGE_AVGOP_H_

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "gapforge/gates.h"
#include "gapforge/irrep.h"
#include "gapforge/spectral_norm.h"
#include "gapforge/weights.h"

namespace gapforge {

struct BlockProgress {
  Weight weight;
  std::uint64_t dim;
  std::size_t index;
  std::size_t total;
  double norm;
};

struct GapOptions {
  // 0 means hardware concurrency.
  int threads = 0;
  // Replace a non-symmetric S by S u S^-1 instead of rejecting it.
  bool auto_symmetrize = false;
  IrrepMethod method = IrrepMethod::kGivens;
  NormOptions norm;
  // nullptr selects BasisCache::global().
  BasisCache* cache = nullptr;
  // Called once per finished block, serialized under a mutex.
  std::function<void(const BlockProgress&)> progress;
};

// Averaging operator at scale t, one dense block per nontrivial weight.
struct BlockOperator {
  int t = 0;
  std::map<Weight, Eigen::MatrixXcd, DescendingOrder> blocks;
};

struct BlockNorm {
  Weight weight{0, 0};
  std::uint64_t dim = 0;
  double norm = 0.0;
  int iterations = 0;
  bool dense = false;
};

struct GapReport {
  int t = 0;
  double gap = 0.0;
  Weight worst_weight{0, 0};
  // In enumeration order.
  std::vector<BlockNorm> per_weight;
};

// (1/|S|) sum_{U in S} pi_lambda(U). For symmetric sets the pairs U, U^-1
// are added as pi(U) + pi(U)^H, so the block is Hermitian by construction.
Eigen::MatrixXcd averaging_block(const Weight& weight, const GateSet& set,
                                 const GapOptions& options = {});

BlockOperator build_block_operator(const GateSet& set, int t,
                                   const GapOptions& options = {});

// gap_t(S) = 1 - max over nontrivial weights of the block norm. Blocks are
// built, measured and dropped one at a time. Throws DomainError for t < 1 or
// a non-symmetric S without auto_symmetrize.
GapReport gap_at_scale(const GateSet& set, int t,
                       const GapOptions& options = {});

struct ConvolutionGap {
  double gap_square = 0.0;
  double gap = 0.0;
  // Largest violation of gap_square >= gap >= gap_square / 2 (0 if none).
  double violation = 0.0;
};

// Gap of the convolution square, with blocks pi(nu)^H pi(nu), checked
// against the symmetrization sandwich. Any S is accepted.
ConvolutionGap convolution_square_gap(const GateSet& set, int t,
                                      const GapOptions& options = {});

// max over nontrivial blocks of ||A^l|| for l = 1..max_power.
std::vector<double> convergence_profile(const GateSet& set, int t,
                                        int max_power,
                                        const GapOptions& options = {});

// Lanczos seed derived from the weight and |S|.
std::uint64_t block_seed(const Weight& weight, std::size_t set_size,
                         std::uint64_t base);

}  // namespace gapforge

#endif  // GAPFORGE_AVGOP_H_
