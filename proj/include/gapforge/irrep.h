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

#ifndef GAPFORGE_IRREP_H_
#define GAPFORGE_IRREP_H_

#include <complex>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "gapforge/weights.h"

namespace gapforge {

using Complex = std::complex<double>;
using SparseMatrixd = Eigen::SparseMatrix<double>;

inline constexpr std::uint64_t kDefaultDimensionCap = 2'000'000;

// How irrep_matrix turns a group element into a representation matrix.
enum class IrrepMethod {
  // Factor U into adjacent Givens rotations and a diagonal. Each rotation
  // lives in an sl(2) subalgebra whose image is block diagonal in the
  // Gelfand-Tsetlin basis, so only small blocks are ever exponentiated.
  kGivens,
  // Exponentiate the full image of the traceless logarithm of U by
  // diagonalizing the dense Hermitian matrix. O(dim^3); used as a check.
  kAlgebraEigen,
};

// Patterns that agree on every row except row `level`. The sl(2) spanned by
// E_{level,level+1} and its adjoint acts inside each such block.
struct LevelBlock {
  struct Entry {
    int row;
    int col;
    double value;
  };
  std::vector<int> indices;
  // Local image of E_{level,level+1}, in block-local coordinates.
  std::vector<Entry> raising;
};

// Orthonormal Gelfand-Tsetlin basis of the gl(d) irrep with signature
// weight + shift, where shift = -weight[d-1] makes every entry nonnegative.
// Generators use 0-based indices: cartan(a) is E_{aa}, raising(a) is
// E_{a,a+1}. All images are real; lowering operators are transposes.
class GTBasis {
 public:
  // Throws ResourceError if the Weyl dimension exceeds `dimension_cap`.
  static GTBasis Build(const Weight& weight,
                       std::uint64_t dimension_cap = kDefaultDimensionCap);

  const Weight& weight() const { return weight_; }
  int d() const { return weight_.dimension(); }
  int shift() const { return shift_; }
  std::size_t dim() const { return patterns_.size(); }

  // Rows are stored top (d entries) to bottom (1 entry), flattened.
  std::span<const int> pattern(std::size_t i) const { return patterns_[i]; }

  const Eigen::VectorXd& cartan(int a) const { return cartan_[a]; }
  const SparseMatrixd& raising(int a) const { return raising_[a]; }
  SparseMatrixd lowering(int a) const { return raising_[a].transpose(); }

  // Image of the matrix unit e_{ab} for any a, b (built from commutators of
  // the simple generators).
  SparseMatrixd generator(int a, int b) const;

  std::span<const LevelBlock> level_blocks(int a) const { return blocks_[a]; }

 private:
  GTBasis() = default;

  Weight weight_{0, 0};
  int shift_ = 0;
  std::vector<std::vector<int>> patterns_;
  std::vector<Eigen::VectorXd> cartan_;
  std::vector<SparseMatrixd> raising_;
  std::vector<std::vector<LevelBlock>> blocks_;
};

// pi_lambda(U) for the PU(d) class of U. U must be unitary to 1e-10
// (DomainError otherwise); it is normalized to determinant one first, which
// makes the result independent of the global phase of U.
Eigen::MatrixXcd irrep_matrix(const GTBasis& basis, const Eigen::MatrixXcd& U,
                              IrrepMethod method = IrrepMethod::kGivens);

// Image of a Hermitian d x d matrix H under the Lie algebra representation,
// sum_{ab} H_ab E_ab. Dense and Hermitian.
Eigen::MatrixXcd algebra_image(const GTBasis& basis, const Eigen::MatrixXcd& H);

struct CharacterValue {
  Complex value;
  // True when the phases were too close for the determinant ratio and the
  // Jacobi-Trudi form was used instead.
  bool fallback = false;
};

// Weyl character of the irrep at diag(exp(i phases)), as a ratio of
// alternants. Near-coincident phases switch to the Jacobi-Trudi determinant,
// which is the continuous extension of the ratio.
CharacterValue weyl_character(const Weight& weight,
                              std::span<const double> phases);

// Eigenphases of a unitary matrix in (-pi, pi], from its Schur form.
std::vector<double> eigenphases(const Eigen::MatrixXcd& U);

// Thread-safe cache of bases keyed by weight. Concurrent lookups share a
// reader lock; a missing basis is built outside the lock and inserted by a
// single writer.
class BasisCache {
 public:
  explicit BasisCache(std::uint64_t dimension_cap = kDefaultDimensionCap)
      : dimension_cap_(dimension_cap) {}

  std::shared_ptr<const GTBasis> get(const Weight& weight);
  std::size_t size() const;
  void clear();
  std::uint64_t dimension_cap() const { return dimension_cap_; }

  static BasisCache& global();

 private:
  std::uint64_t dimension_cap_;
  mutable std::shared_mutex mu_;
  std::unordered_map<Weight, std::shared_ptr<const GTBasis>, WeightHash> map_;
};

}  // namespace gapforge

#endif  // GAPFORGE_IRREP_H_
