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

#include "gapforge/irrep.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "gapforge/error.h"

namespace gapforge {
namespace {

constexpr double kUnitarityTol = 1e-10;
constexpr double kCharacterGapThreshold = 1e-3;

// Offset of GT row `level` (1-based, level d is the top row) in a flattened
// pattern.
int row_offset(int d, int level) {
  return d * (d + 1) / 2 - level * (level + 1) / 2;
}

struct PatternHash {
  std::size_t operator()(const std::vector<int>& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int v : p) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

void enumerate_patterns(int d, std::vector<int>& current, int level,
                        std::vector<std::vector<int>>& out) {
  if (level == 1) {
    out.push_back(current);
    return;
  }
  int above = row_offset(d, level);
  int below = row_offset(d, level - 1);
  // Fill row level-1 entry by entry; entry i lies in [m_{level,i+1},
  // m_{level,i}].
  auto fill = [&](auto&& self, int i) -> void {
    if (i == level - 1) {
      enumerate_patterns(d, current, level - 1, out);
      return;
    }
    for (int v = current[above + i + 1]; v <= current[above + i]; ++v) {
      current[below + i] = v;
      self(self, i + 1);
    }
  };
  fill(fill, 0);
}

void check_unitary(const Eigen::MatrixXcd& U, int d) {
  if (U.rows() != d || U.cols() != d) {
    throw DomainError("irrep_matrix: expected a " + std::to_string(d) + "x" +
                      std::to_string(d) + " matrix");
  }
  Eigen::MatrixXcd defect =
      U.adjoint() * U - Eigen::MatrixXcd::Identity(d, d);
  if (!(defect.cwiseAbs().maxCoeff() <= kUnitarityTol)) {
    throw DomainError("irrep_matrix: input is not unitary");
  }
}

Eigen::MatrixXcd normalize_det(const Eigen::MatrixXcd& U) {
  Complex det = U.determinant();
  double phase = std::arg(det) / static_cast<double>(U.rows());
  return U * std::polar(1.0, -phase);
}

// exp(i A) for the local image A of the 2x2 Hermitian K acting on rows
// (a, a+1). A is conjugated to a real symmetric matrix by the phase of K01,
// since E_{a,a+1} shifts the E_aa eigenvalue by one.
Eigen::MatrixXcd local_exponential(const GTBasis& basis, int a,
                                   const LevelBlock& block,
                                   const Eigen::Matrix2cd& K) {
  const int b = static_cast<int>(block.indices.size());
  const Eigen::VectorXd& ca = basis.cartan(a);
  const Eigen::VectorXd& cb = basis.cartan(a + 1);
  const double k00 = K(0, 0).real();
  const double k11 = K(1, 1).real();
  const double mag = std::abs(K(0, 1));
  const double theta = mag > 0 ? std::arg(K(0, 1)) : 0.0;

  Eigen::MatrixXcd P(b, b);
  if (b == 1) {
    int p = block.indices[0];
    P(0, 0) = std::polar(1.0, k00 * ca[p] + k11 * cb[p]);
    return P;
  }
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(b, b);
  for (int r = 0; r < b; ++r) {
    int p = block.indices[r];
    A(r, r) = k00 * ca[p] + k11 * cb[p];
  }
  for (const auto& e : block.raising) {
    A(e.row, e.col) += mag * e.value;
    A(e.col, e.row) += mag * e.value;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success) {
    throw ConvergenceError("irrep_matrix: local eigensolver failed");
  }
  const Eigen::MatrixXd& V = es.eigenvectors();
  Eigen::MatrixXcd Y(b, b);
  for (int j = 0; j < b; ++j) {
    Y.col(j) = V.col(j).cast<Complex>() * std::polar(1.0, es.eigenvalues()[j]);
  }
  P.noalias() = Y * V.transpose().cast<Complex>();
  if (theta != 0.0) {
    for (int c = 0; c < b; ++c) {
      for (int r = 0; r < b; ++r) {
        double shift = ca[block.indices[r]] - ca[block.indices[c]];
        if (shift != 0.0) P(r, c) *= std::polar(1.0, theta * shift);
      }
    }
  }
  return P;
}

// Hermitian logarithm of a 2x2 unitary.
Eigen::Matrix2cd log_unitary2(const Eigen::Matrix2cd& g) {
  Eigen::ComplexSchur<Eigen::Matrix2cd> schur(g);
  const Eigen::Matrix2cd& Q = schur.matrixU();
  const Eigen::Matrix2cd& T = schur.matrixT();
  Eigen::Matrix2cd D = Eigen::Matrix2cd::Zero();
  D(0, 0) = std::arg(T(0, 0));
  D(1, 1) = std::arg(T(1, 1));
  Eigen::Matrix2cd K = Q * D * Q.adjoint();
  return (K + K.adjoint()) * 0.5;
}

Eigen::MatrixXcd givens_irrep(const GTBasis& basis, const Eigen::MatrixXcd& V) {
  const int d = basis.d();
  const Eigen::Index n = static_cast<Eigen::Index>(basis.dim());

  struct Rotation {
    int a;
    Eigen::Matrix2cd g;
  };
  std::vector<Rotation> rotations;
  Eigen::MatrixXcd W = V;
  for (int j = 0; j + 1 < d; ++j) {
    for (int i = d - 1; i > j; --i) {
      Complex x = W(i - 1, j);
      Complex y = W(i, j);
      if (y == Complex(0.0)) continue;
      double r = std::hypot(std::abs(x), std::abs(y));
      Eigen::Matrix2cd G;
      G << std::conj(x) / r, std::conj(y) / r, -y / r, x / r;
      Eigen::MatrixXcd rows = W.middleRows(i - 1, 2);
      W.middleRows(i - 1, 2) = G * rows;
      rotations.push_back({i - 1, G.adjoint()});
    }
  }

  Eigen::MatrixXcd M;
  bool identity = true;
  for (const Rotation& rot : rotations) {
    Eigen::Matrix2cd K = log_unitary2(rot.g);
    std::span<const LevelBlock> blocks = basis.level_blocks(rot.a);
    if (identity) {
      M = Eigen::MatrixXcd::Zero(n, n);
      for (const LevelBlock& block : blocks) {
        Eigen::MatrixXcd P = local_exponential(basis, rot.a, block, K);
        const auto& idx = block.indices;
        for (std::size_t c = 0; c < idx.size(); ++c) {
          for (std::size_t r = 0; r < idx.size(); ++r) {
            M(idx[r], idx[c]) = P(r, c);
          }
        }
      }
      identity = false;
      continue;
    }
    for (const LevelBlock& block : blocks) {
      Eigen::MatrixXcd P = local_exponential(basis, rot.a, block, K);
      const auto& idx = block.indices;
      if (idx.size() == 1) {
        M.col(idx[0]) *= P(0, 0);
        continue;
      }
      Eigen::MatrixXcd cols = M(Eigen::all, idx);
      M(Eigen::all, idx) = cols * P;
    }
  }

  Eigen::VectorXcd diag(n);
  for (Eigen::Index p = 0; p < n; ++p) {
    double phase = 0.0;
    for (int k = 0; k < d; ++k) {
      phase += basis.cartan(k)[p] * std::arg(W(k, k));
    }
    diag[p] = std::polar(1.0, phase);
  }
  if (identity) return diag.asDiagonal();
  return M * diag.asDiagonal();
}

Eigen::MatrixXcd eigen_irrep(const GTBasis& basis, const Eigen::MatrixXcd& V) {
  const int d = basis.d();
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(V);
  Eigen::VectorXd theta(d);
  for (int k = 0; k < d; ++k) theta[k] = std::arg(schur.matrixT()(k, k));
  theta.array() -= theta.mean();
  Eigen::MatrixXcd H = schur.matrixU() * theta.cast<Complex>().asDiagonal() *
                       schur.matrixU().adjoint();
  H = (H + H.adjoint()) * 0.5;
  Eigen::MatrixXcd A = algebra_image(basis, H);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
  if (es.info() != Eigen::Success) {
    throw ConvergenceError("irrep_matrix: eigensolver failed");
  }
  Eigen::VectorXcd phases(A.rows());
  for (Eigen::Index j = 0; j < A.rows(); ++j) {
    phases[j] = std::polar(1.0, es.eigenvalues()[j]);
  }
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

double circular_distance(double x, double y) {
  double r = std::remainder(x - y, 2 * std::numbers::pi);
  return std::abs(r);
}

}  // namespace

GTBasis GTBasis::Build(const Weight& weight, std::uint64_t dimension_cap) {
  const std::uint64_t expected = weyl_dimension(weight);
  if (expected > dimension_cap) {
    throw ResourceError("irrep " + weight.str() + " has dimension " +
                        std::to_string(expected) + " above the cap " +
                        std::to_string(dimension_cap));
  }
  const int d = weight.dimension();
  GTBasis basis;
  basis.weight_ = weight;
  basis.shift_ = -weight[d - 1];

  std::vector<int> current(d * (d + 1) / 2, 0);
  for (int i = 0; i < d; ++i) current[i] = weight[i] + basis.shift_;
  basis.patterns_.reserve(expected);
  enumerate_patterns(d, current, d, basis.patterns_);
  const int n = static_cast<int>(basis.patterns_.size());
  if (static_cast<std::uint64_t>(n) != expected) {
    throw Error("GT pattern count disagrees with the Weyl dimension");
  }

  std::unordered_map<std::vector<int>, int, PatternHash> index;
  index.reserve(n);
  for (int p = 0; p < n; ++p) index.emplace(basis.patterns_[p], p);

  auto entry = [&](const std::vector<int>& p, int level, int i) {
    return p[row_offset(d, level) + i - 1];
  };
  auto row_sum = [&](const std::vector<int>& p, int level) {
    int s = 0;
    for (int i = 1; i <= level; ++i) s += entry(p, level, i);
    return s;
  };

  basis.cartan_.assign(d, Eigen::VectorXd(n));
  for (int p = 0; p < n; ++p) {
    for (int k = 1; k <= d; ++k) {
      int below = k > 1 ? row_sum(basis.patterns_[p], k - 1) : 0;
      basis.cartan_[k - 1][p] = row_sum(basis.patterns_[p], k) - below;
    }
  }

  basis.raising_.resize(d - 1);
  basis.blocks_.resize(d - 1);
  for (int k = 1; k < d; ++k) {
    std::vector<Eigen::Triplet<double>> triplets;
    // Group patterns by every row except row k.
    std::map<std::vector<int>, int> block_of;
    std::vector<LevelBlock>& blocks = basis.blocks_[k - 1];
    std::vector<int> local(n);
    const int off = row_offset(d, k);
    for (int p = 0; p < n; ++p) {
      std::vector<int> key = basis.patterns_[p];
      std::fill(key.begin() + off, key.begin() + off + k, 0);
      auto [it, inserted] =
          block_of.emplace(std::move(key), static_cast<int>(blocks.size()));
      if (inserted) blocks.emplace_back();
      LevelBlock& block = blocks[it->second];
      local[p] = static_cast<int>(block.indices.size());
      block.indices.push_back(p);
    }
    for (int p = 0; p < n; ++p) {
      const std::vector<int>& pat = basis.patterns_[p];
      auto l = [&](int level, int i) { return entry(pat, level, i) - i + 1; };
      for (int i = 1; i <= k; ++i) {
        std::vector<int> target = pat;
        target[off + i - 1] += 1;
        auto it = index.find(target);
        if (it == index.end()) continue;
        double num = 1.0;
        for (int j = 1; j <= k + 1; ++j) num *= l(k, i) - l(k + 1, j);
        for (int j = 1; j <= k - 1; ++j) num *= l(k, i) - l(k - 1, j) + 1;
        double den = 1.0;
        for (int j = 1; j <= k; ++j) {
          if (j == i) continue;
          den *= static_cast<double>(l(k, i) - l(k, j)) *
                 (l(k, i) - l(k, j) + 1);
        }
        double value = std::sqrt(std::abs(-num / den));
        if (value == 0.0) continue;
        triplets.emplace_back(it->second, p, value);
      }
    }
    SparseMatrixd R(n, n);
    R.setFromTriplets(triplets.begin(), triplets.end());
    basis.raising_[k - 1] = std::move(R);

    std::vector<int> owner(n);
    for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
      for (int p : blocks[bi].indices) owner[p] = bi;
    }
    for (const auto& t : triplets) {
      LevelBlock& block = blocks[owner[t.col()]];
      block.raising.push_back({local[t.row()], local[t.col()], t.value()});
    }
  }
  return basis;
}

SparseMatrixd GTBasis::generator(int a, int b) const {
  const int d = this->d();
  if (a < 0 || b < 0 || a >= d || b >= d) {
    throw DomainError("generator index out of range");
  }
  if (a == b) {
    SparseMatrixd D(dim(), dim());
    std::vector<Eigen::Triplet<double>> t;
    for (std::size_t p = 0; p < dim(); ++p) {
      if (cartan_[a][p] != 0.0) t.emplace_back(p, p, cartan_[a][p]);
    }
    D.setFromTriplets(t.begin(), t.end());
    return D;
  }
  if (a > b) return SparseMatrixd(generator(b, a).transpose());
  SparseMatrixd E = raising_[a];
  for (int c = a + 2; c <= b; ++c) {
    const SparseMatrixd& R = raising_[c - 1];
    E = SparseMatrixd(E * R - R * E);
  }
  return E;
}

Eigen::MatrixXcd algebra_image(const GTBasis& basis,
                               const Eigen::MatrixXcd& H) {
  const int d = basis.d();
  const Eigen::Index n = static_cast<Eigen::Index>(basis.dim());
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  for (int a = 0; a < d; ++a) {
    for (Eigen::Index p = 0; p < n; ++p) {
      A(p, p) += H(a, a) * basis.cartan(a)[p];
    }
    for (int b = a + 1; b < d; ++b) {
      SparseMatrixd E = basis.generator(a, b);
      for (int col = 0; col < E.outerSize(); ++col) {
        for (SparseMatrixd::InnerIterator it(E, col); it; ++it) {
          A(it.row(), it.col()) += H(a, b) * it.value();
          A(it.col(), it.row()) += H(b, a) * it.value();
        }
      }
    }
  }
  return A;
}

Eigen::MatrixXcd irrep_matrix(const GTBasis& basis, const Eigen::MatrixXcd& U,
                              IrrepMethod method) {
  check_unitary(U, basis.d());
  Eigen::MatrixXcd V = normalize_det(U);
  if (basis.weight().is_trivial()) return Eigen::MatrixXcd::Ones(1, 1);
  switch (method) {
    case IrrepMethod::kGivens:
      return givens_irrep(basis, V);
    case IrrepMethod::kAlgebraEigen:
      return eigen_irrep(basis, V);
  }
  throw DomainError("unknown irrep method");
}

std::vector<double> eigenphases(const Eigen::MatrixXcd& U) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(U, false);
  std::vector<double> out(U.rows());
  for (Eigen::Index k = 0; k < U.rows(); ++k) {
    out[k] = std::arg(schur.matrixT()(k, k));
  }
  return out;
}

CharacterValue weyl_character(const Weight& weight,
                              std::span<const double> phases) {
  const int d = weight.dimension();
  if (static_cast<int>(phases.size()) != d) {
    throw DomainError("weyl_character: need one phase per dimension");
  }
  const int shift = -weight[d - 1];
  std::vector<int> m(d);
  for (int i = 0; i < d; ++i) m[i] = weight[i] + shift;
  double total = 0.0;
  for (double p : phases) total += p;
  // Undo the shift by det^{-shift}.
  const Complex twist = std::polar(1.0, -shift * total);

  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      min_gap = std::min(min_gap, circular_distance(phases[i], phases[j]));
    }
  }

  if (min_gap >= kCharacterGapThreshold) {
    Eigen::MatrixXcd num(d, d), den(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        num(i, j) = std::polar(1.0, (m[i] + d - 1 - i) * phases[j]);
        den(i, j) = std::polar(1.0, (d - 1 - i) * phases[j]);
      }
    }
    return {num.determinant() / den.determinant() * twist, false};
  }

  // Jacobi-Trudi: s_m = det[h_{m_i - i + j}].
  const int top = m[0] + d;
  std::vector<Complex> h(top + 1, Complex(0.0));
  h[0] = 1.0;
  for (int j = 0; j < d; ++j) {
    Complex z = std::polar(1.0, phases[j]);
    for (int k = 1; k <= top; ++k) h[k] += z * h[k - 1];
  }
  Eigen::MatrixXcd J(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      int k = m[i] - i + j;
      J(i, j) = (k < 0 || k > top) ? Complex(0.0) : h[k];
    }
  }
  return {J.determinant() * twist, true};
}

std::shared_ptr<const GTBasis> BasisCache::get(const Weight& weight) {
  {
    std::shared_lock lock(mu_);
    auto it = map_.find(weight);
    if (it != map_.end()) return it->second;
  }
  auto built =
      std::make_shared<const GTBasis>(GTBasis::Build(weight, dimension_cap_));
  std::unique_lock lock(mu_);
  auto [it, inserted] = map_.emplace(weight, std::move(built));
  return it->second;
}

std::size_t BasisCache::size() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

void BasisCache::clear() {
  std::unique_lock lock(mu_);
  map_.clear();
}

BasisCache& BasisCache::global() {
  static BasisCache cache;
  return cache;
}

}  // namespace gapforge
