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

#ifndef GAPFORGE_SPECTRAL_NORM_H_
#define GAPFORGE_SPECTRAL_NORM_H_

#include <cstdint>

#include <Eigen/Dense>

namespace gapforge {

struct NormOptions {
  // Relative residual at which both extreme Ritz values count as converged.
  double tolerance = 1e-10;
  // Blocks smaller than this go straight to a dense eigensolver.
  int dense_below = 512;
  // Lanczos iteration budget, as a multiple of the block dimension.
  int max_iterations_factor = 10;
  std::uint64_t seed = 0x5eed;
};

struct NormResult {
  double norm = 0.0;
  int iterations = 0;
  bool dense = false;
  // Lanczos stopped on its budget and the dense solver had to take over.
  bool fallback = false;
};

// Operator 2-norm of a square block. Hermitian blocks use Lanczos with full
// reorthogonalization on A; other blocks use Lanczos on A^H A. Throws
// ConvergenceError if both Lanczos and the dense solver fail.
NormResult block_operator_norm(const Eigen::MatrixXcd& A,
                               const NormOptions& options = {});

bool is_hermitian(const Eigen::MatrixXcd& A, double tolerance = 1e-12);

}  // namespace gapforge

#endif  // GAPFORGE_SPECTRAL_NORM_H_
