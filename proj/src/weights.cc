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

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "gapforge/error.h"

namespace gapforge {

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) {
    throw DomainError("weight needs at least two entries");
  }
  if (!std::is_sorted(entries_.begin(), entries_.end(), std::greater<>())) {
    throw DomainError("weight " + str() + " is not nonincreasing");
  }
  if (std::accumulate(entries_.begin(), entries_.end(), 0L) != 0) {
    throw DomainError("weight " + str() + " does not sum to zero");
  }
}

Weight::Weight(std::initializer_list<int> entries)
    : Weight(std::vector<int>(entries)) {}

Weight Weight::Trivial(int d) { return Weight(std::vector<int>(d, 0)); }

bool Weight::is_trivial() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](int x) { return x == 0; });
}

Weight Weight::conjugate() const {
  std::vector<int> c(entries_.rbegin(), entries_.rend());
  for (int& x : c) x = -x;
  return Weight(std::move(c));
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : w.entries()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

// Partitions of n into at most max_parts parts, each part at most max_part.
void partitions(int n, int max_parts, int max_part, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  if (max_parts == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions(n - p, max_parts - 1, p, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  partitions(n, max_parts, n, prefix, out);
  return out;
}

}  // namespace

std::vector<Weight> enumerate_weights(int d, int t) {
  if (d < 2) throw DomainError("dimension d must be at least 2");
  if (t < 0) throw DomainError("scale t must be nonnegative");

  // Interleave a positive partition (front) with a negative one (back).
  std::vector<Weight> out;
  out.push_back(Weight::Trivial(d));
  for (int s = 1; s <= t; ++s) {
    for (const auto& pos : partitions(s, d - 1)) {
      const int free = d - static_cast<int>(pos.size());
      for (const auto& neg : partitions(s, free)) {
        std::vector<int> e(d, 0);
        std::copy(pos.begin(), pos.end(), e.begin());
        for (std::size_t j = 0; j < neg.size(); ++j) {
          e[d - 1 - j] = -neg[j];
        }
        out.emplace_back(std::move(e));
      }
    }
  }
  std::sort(out.begin(), out.end(), DescendingOrder{});
  return out;
}

std::vector<Weight> enumerate_nontrivial_weights(int d, int t) {
  auto all = enumerate_weights(d, t);
  all.pop_back();  // the trivial weight sorts last
  return all;
}

int weight_one_norm(const Weight& w) {
  int n = 0;
  for (int x : w.entries()) n += std::abs(x);
  return n;
}

int weight_level(const Weight& w) { return weight_one_norm(w) / 2; }

std::uint64_t weyl_dimension(const Weight& w) {
  using u128 = unsigned __int128;
  const auto gcd = [](u128 a, u128 b) {
    while (b != 0) {
      const u128 r = a % b;
      a = b;
      b = r;
    }
    return a;
  };
  constexpr u128 kLimit = static_cast<u128>(1) << 120;
  const int d = w.dimension();
  u128 num = 1;
  u128 den = 1;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const u128 a = static_cast<u128>(w[i] - w[j] + j - i);
      const u128 b = static_cast<u128>(j - i);
      if (num > kLimit / a) throw ResourceError("Weyl dimension overflow for " + w.str());
      num *= a;
      den *= b;
      const u128 g = gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  const u128 dim = num / den;
  if (den != 1 || dim > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceError("Weyl dimension overflow for " + w.str());
  }
  return static_cast<std::uint64_t>(dim);
}

int frobenius_schur(const Weight& w) { return w == w.conjugate() ? 1 : 0; }

IrrepMeta make_irrep_meta(const Weight& w) {
  return IrrepMeta{w, weyl_dimension(w), frobenius_schur(w), weight_one_norm(w)};
}

}  // namespace gapforge
