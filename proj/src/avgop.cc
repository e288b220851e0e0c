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

#include <algorithm>
#include <mutex>

#include "gapforge/error.h"
#include "gapforge/parallel.h"

namespace gapforge {
namespace {

BasisCache& cache_of(const GapOptions& options) {
  return options.cache ? *options.cache : BasisCache::global();
}

Eigen::MatrixXcd block_from_basis(const GTBasis& basis, const GateSet& set,
                                  IrrepMethod method) {
  const Eigen::Index n = static_cast<Eigen::Index>(basis.dim());
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  const double scale = 1.0 / static_cast<double>(set.size());
  if (set.symmetric()) {
    for (const Gate& g : set.gates()) {
      Eigen::MatrixXcd P = irrep_matrix(basis, g.matrix, method);
      A += P;
      A += P.adjoint();
    }
    return A * scale;
  }
  for (const Gate& g : set.gates()) A += irrep_matrix(basis, g.matrix, method);
  A *= scale;
  if (set.inverse_closed()) A = (A + A.adjoint()) * 0.5;
  return A;
}

const GateSet& require_symmetric(const GateSet& set, const GapOptions& options,
                                 GateSet& storage) {
  if (set.symmetric() || set.inverse_closed()) return set;
  if (!options.auto_symmetrize) {
    throw DomainError(
        "gate set is not symmetric; pass auto-symmetrize to use S u S^-1");
  }
  storage = symmetrized(set);
  return storage;
}

void require_scale(int t) {
  if (t < 1) throw DomainError("scale t must be at least 1");
}

// Progress hooks read the headline norm of a per-block result.
double block_norm_of(const BlockNorm& b) { return b.norm; }
double block_norm_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : v.front();
}
double block_norm_of(const std::pair<double, double>& p) { return p.first; }

// Computes fn(weight, block) for every nontrivial weight at scale t, in
// parallel, storing results by index.
template <typename Result, typename Fn>
std::vector<Result> for_each_block(const GateSet& set, int t,
                                   const GapOptions& options, Fn&& fn) {
  const std::vector<Weight> weights = enumerate_nontrivial_weights(set.d(), t);
  std::vector<Result> results(weights.size());
  std::mutex progress_mu;
  BasisCache& cache = cache_of(options);
  parallel_for(weights.size(), options.threads, [&](std::size_t i) {
    auto basis = cache.get(weights[i]);
    Eigen::MatrixXcd A = block_from_basis(*basis, set, options.method);
    results[i] = fn(weights[i], A);
    if (options.progress) {
      std::lock_guard lock(progress_mu);
      options.progress({weights[i], basis->dim(), i, weights.size(),
                        block_norm_of(results[i])});
    }
  });
  return results;
}

}  // namespace

std::uint64_t block_seed(const Weight& weight, std::size_t set_size,
                         std::uint64_t base) {
  std::uint64_t h = WeightHash{}(weight);
  h ^= static_cast<std::uint64_t>(set_size) * 0x9e3779b97f4a7c15ULL;
  h ^= base + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
  return h;
}

Eigen::MatrixXcd averaging_block(const Weight& weight, const GateSet& set,
                                 const GapOptions& options) {
  if (weight.dimension() != set.d()) {
    throw DomainError("weight and gate set dimensions differ");
  }
  auto basis = cache_of(options).get(weight);
  return block_from_basis(*basis, set, options.method);
}

BlockOperator build_block_operator(const GateSet& set, int t,
                                   const GapOptions& options) {
  require_scale(t);
  BlockOperator op;
  op.t = t;
  for (const Weight& w : enumerate_nontrivial_weights(set.d(), t)) {
    op.blocks.emplace(w, averaging_block(w, set, options));
  }
  return op;
}

GapReport gap_at_scale(const GateSet& input, int t,
                       const GapOptions& options) {
  require_scale(t);
  GateSet storage = input;
  const GateSet& set = require_symmetric(input, options, storage);
  const std::size_t size = set.size();
  auto norms = for_each_block<BlockNorm>(
      set, t, options, [&](const Weight& w, const Eigen::MatrixXcd& A) {
        NormOptions no = options.norm;
        no.seed = block_seed(w, size, options.norm.seed);
        NormResult r = block_operator_norm(A, no);
        return BlockNorm{w, static_cast<std::uint64_t>(A.rows()), r.norm,
                         r.iterations, r.dense};
      });
  GapReport report;
  report.t = t;
  double worst = -1.0;
  for (const BlockNorm& b : norms) {
    if (b.norm > worst) {
      worst = b.norm;
      report.worst_weight = b.weight;
    }
  }
  report.gap = 1.0 - worst;
  report.per_weight = std::move(norms);
  return report;
}

ConvolutionGap convolution_square_gap(const GateSet& set, int t,
                                      const GapOptions& options) {
  require_scale(t);
  const std::size_t size = set.size();
  auto pairs = for_each_block<std::pair<double, double>>(
      set, t, options, [&](const Weight& w, const Eigen::MatrixXcd& A) {
        NormOptions no = options.norm;
        no.seed = block_seed(w, size, options.norm.seed);
        double plain = block_operator_norm(A, no).norm;
        Eigen::MatrixXcd B = A.adjoint() * A;
        B = (B + B.adjoint()) * 0.5;
        double square = block_operator_norm(B, no).norm;
        return std::make_pair(plain, square);
      });
  double max_plain = 0.0, max_square = 0.0;
  for (const auto& [plain, square] : pairs) {
    max_plain = std::max(max_plain, plain);
    max_square = std::max(max_square, square);
  }
  ConvolutionGap out;
  out.gap = 1.0 - max_plain;
  out.gap_square = 1.0 - max_square;
  out.violation = std::max({0.0, out.gap - out.gap_square,
                            out.gap_square / 2 - out.gap});
  return out;
}

std::vector<double> convergence_profile(const GateSet& set, int t,
                                        int max_power,
                                        const GapOptions& options) {
  require_scale(t);
  if (max_power < 1) throw DomainError("max_power must be at least 1");
  const std::size_t size = set.size();
  auto rows = for_each_block<std::vector<double>>(
      set, t, options, [&](const Weight& w, const Eigen::MatrixXcd& A) {
        NormOptions no = options.norm;
        no.seed = block_seed(w, size, options.norm.seed);
        std::vector<double> norms;
        norms.reserve(max_power);
        Eigen::MatrixXcd P = A;
        for (int l = 1; l <= max_power; ++l) {
          norms.push_back(block_operator_norm(P, no).norm);
          if (l < max_power) P = P * A;
        }
        return norms;
      });
  std::vector<double> profile(max_power, 0.0);
  for (const auto& row : rows) {
    for (int l = 0; l < max_power; ++l) {
      profile[l] = std::max(profile[l], row[l]);
    }
  }
  return profile;
}

}  // namespace gapforge
