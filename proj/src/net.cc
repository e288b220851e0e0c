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
#include <random>

#include "gapforge/error.h"
#include "gapforge/gates.h"
#include "gapforge/parallel.h"

namespace gapforge {
namespace {

struct Word {
  Eigen::MatrixXcd matrix;
  int last;
};

// inverse[a] is the letter cancelling a, or -1.
std::vector<int> inverse_letters(const GateSet& set,
                                 const std::vector<Eigen::MatrixXcd>& letters) {
  const int m = static_cast<int>(letters.size());
  std::vector<int> inverse(m, -1);
  if (set.symmetric()) {
    const int k = m / 2;
    for (int a = 0; a < m; ++a) inverse[a] = a < k ? a + k : a - k;
    return inverse;
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (pu_distance_from_product(letters[a] * letters[b]) <= 1e-10) {
        inverse[a] = b;
        break;
      }
    }
  }
  return inverse;
}

double nearest(const Eigen::MatrixXcd& target_adj,
               const std::vector<Word>& words, double best) {
  for (const Word& w : words) {
    Eigen::MatrixXcd prod = target_adj * w.matrix;
    if (pu_distance_lower_bound(prod) >= best) continue;
    best = std::min(best, pu_distance_from_product(prod));
  }
  return best;
}

}  // namespace

std::vector<NetEstimate> empirical_net_profile(const GateSet& set,
                                               int max_length, double eps,
                                               std::size_t samples,
                                               std::uint64_t seed,
                                               const NetOptions& options) {
  if (max_length < 0) throw DomainError("word length must be nonnegative");
  if (!(eps > 0)) throw DomainError("eps must be positive");
  const int d = set.d();
  const std::vector<Eigen::MatrixXcd> letters = set.elements();
  const std::vector<int> inverse = inverse_letters(set, letters);

  std::vector<Eigen::MatrixXcd> targets_adj(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i),
                      static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    targets_adj[i] = haar_unitary(d, rng).adjoint();
  }

  std::vector<double> best(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    best[i] = pu_distance_from_product(targets_adj[i]);
  }

  std::vector<NetEstimate> profile;
  std::vector<Word> level{{Eigen::MatrixXcd::Identity(d, d), -1}};
  std::uint64_t total_words = 1;
  auto record = [&](int length) {
    NetEstimate e;
    e.length = length;
    e.eps = eps;
    e.samples = samples;
    e.words = total_words;
    if (samples == 0) {
      e.covered_fraction = 1.0;
      e.warnings.push_back("no samples drawn; coverage is vacuous");
    } else {
      std::size_t covered = 0;
      for (double b : best) covered += b <= eps ? 1 : 0;
      e.covered_fraction =
          static_cast<double>(covered) / static_cast<double>(samples);
      e.max_observed_distance = *std::max_element(best.begin(), best.end());
    }
    profile.push_back(std::move(e));
  };
  record(0);

  for (int length = 1; length <= max_length; ++length) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (int a = 0; a < static_cast<int>(letters.size()); ++a) {
        if (w.last >= 0 && inverse[w.last] == a) continue;
        if (total_words + next.size() + 1 > options.word_cap) {
          throw ResourceError("word enumeration exceeds the cap of " +
                              std::to_string(options.word_cap) + " words");
        }
        next.push_back({w.matrix * letters[a], a});
      }
    }
    total_words += next.size();
    level = std::move(next);
    parallel_for(samples, options.threads, [&](std::size_t i) {
      best[i] = nearest(targets_adj[i], level, best[i]);
    });
    record(length);
  }
  return profile;
}

NetEstimate empirical_net(const GateSet& set, int length, double eps,
                          std::size_t samples, std::uint64_t seed,
                          const NetOptions& options) {
  return empirical_net_profile(set, length, eps, samples, seed, options).back();
}

}  // namespace gapforge
