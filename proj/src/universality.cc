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

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "gapforge/avgop.h"
#include "gapforge/gates.h"

namespace gapforge {
namespace {

constexpr double kNormOneTol = 1e-8;
constexpr double kLikelyMargin = 1e-6;
constexpr double kInvariantTol = 1e-6;

}  // namespace

UniversalityReport universality_heuristic(const GateSet& set, int t_probe) {
  GapOptions options;
  options.auto_symmetrize = true;
  GateSet sym = set.symmetric() || set.inverse_closed() ? set : symmetrized(set);
  GapReport report = gap_at_scale(sym, t_probe, options);

  UniversalityReport out;
  out.t_probe = t_probe;
  out.max_norm = 1.0 - report.gap;
  auto entries = report.worst_weight.entries();
  out.worst_weight.assign(entries.begin(), entries.end());

  if (out.max_norm <= 1.0 - kLikelyMargin) {
    out.verdict = Universality::kLikely;
    return out;
  }
  if (out.max_norm < 1.0 - kNormOneTol) {
    out.verdict = Universality::kInconclusive;
    return out;
  }

  // Eigenvector of the extreme eigenvalue, then check that every gate fixes
  // it (eigenvalue +1) or negates it (eigenvalue -1).
  Eigen::MatrixXcd A = averaging_block(report.worst_weight, sym, options);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
  const Eigen::Index n = A.rows();
  bool top = std::abs(es.eigenvalues()[n - 1]) >= std::abs(es.eigenvalues()[0]);
  Eigen::VectorXcd v = es.eigenvectors().col(top ? n - 1 : 0);
  double sign = top ? 1.0 : -1.0;
  auto basis = BasisCache::global().get(report.worst_weight);
  double residual = 0.0;
  for (const Gate& g : sym.gates()) {
    Eigen::MatrixXcd P = irrep_matrix(*basis, g.matrix);
    residual = std::max(residual, (P * v - sign * v).norm());
  }
  out.invariant_residual = residual;
  out.verdict = residual <= kInvariantTol ? Universality::kNot
                                          : Universality::kInconclusive;
  return out;
}

}  // namespace gapforge
