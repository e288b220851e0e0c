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

#ifndef GAPFORGE_WEIGHTS_H_
#define GAPFORGE_WEIGHTS_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gapforge {

// Highest weight of an irreducible representation of PU(d), stored as its
// canonical representative: a nonincreasing integer sequence summing to zero.
class Weight {
 public:
  // Throws DomainError unless `entries` is nonincreasing with zero sum and
  // has length at least 2.
  explicit Weight(std::vector<int> entries);
  Weight(std::initializer_list<int> entries);

  // The all-zero weight of the trivial representation.
  static Weight Trivial(int d);

  int dimension() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  int operator[](int i) const { return entries_[i]; }

  bool is_trivial() const;

  // (-l_d, ..., -l_1): the highest weight of the dual representation.
  Weight conjugate() const;

  std::string str() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  // Plain lexicographic order on the entries.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

// Deterministic enumeration order: lexicographically descending.
struct DescendingOrder {
  bool operator()(const Weight& a, const Weight& b) const { return b < a; }
};

struct IrrepMeta {
  Weight weight;
  std::uint64_t dim;
  int fs_indicator;
  int one_norm;
};

// All weights of irreps occurring in (U (x) conj U)^{(x) t}: nonincreasing,
// zero sum, positive part summing to at most t. Lexicographically descending,
// so the trivial weight comes last.
std::vector<Weight> enumerate_weights(int d, int t);

// enumerate_weights without the trivial weight.
std::vector<Weight> enumerate_nontrivial_weights(int d, int t);

int weight_one_norm(const Weight& w);

// Sum of the positive entries; the smallest t with w in the scale-t set.
int weight_level(const Weight& w);

// Weyl dimension formula for su(d). Throws ResourceError on overflow.
std::uint64_t weyl_dimension(const Weight& w);

// 1 for self-conjugate (real) irreps, 0 for complex ones. Quaternionic irreps
// do not descend to PU(d), so -1 never occurs.
int frobenius_schur(const Weight& w);

IrrepMeta make_irrep_meta(const Weight& w);

}  // namespace gapforge

#endif  // GAPFORGE_WEIGHTS_H_
