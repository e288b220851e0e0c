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

#ifndef GAPFORGE_BOUNDS_H_
#define GAPFORGE_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gapforge/avgop.h"
#include "gapforge/constants.h"
#include "gapforge/gates.h"
#include "gapforge/weights.h"

namespace gapforge {

// The symmetric set of squared generators of S with the listed generator
// pairs (0-based) removed. S must carry the symmetric flag.
GateSet subset_squares(const GateSet& set, const std::vector<int>& removed);

struct SubsetGap {
  // Smallest gap over all removal sets of this size.
  double min_gap = 0.0;
  // First removal set (in lexicographic order) attaining it.
  std::vector<int> worst_subset;
  std::size_t subsets = 0;
};

struct SubsetGapTable {
  std::int64_t t0 = 0;
  int k = 0;
  // Indexed by the number m = 0..k-2 of removed pairs.
  std::vector<SubsetGap> per_m;
};

struct PairVerdict {
  int first;
  int second;
  UniversalityReport report;
};

struct GtZeroOptions {
  // Scale to use instead of t0; marks results as below theorem scale.
  std::optional<std::int64_t> t_override;
  GapOptions gap;
  // Run the universality heuristic on every 2-pair subset of S^2.
  bool check_universality = true;
  int universality_probe = 3;
};

struct GtZeroResult {
  double g = 0.0;
  SubsetGapTable table;
  BoundParams params;
  bool below_theorem_scale = false;
  std::vector<PairVerdict> universality;
  std::vector<std::string> warnings;
};

// g_{t0}(S) = (1/|S|) sum_{m=0}^{k-2} (min gap of S^2 with m pairs removed)^2.
// Throws ResourceError when the blocks at the chosen scale exceed the
// dimension cap.
GtZeroResult g_t0(const GateSet& set, double eps0,
                  const GtZeroOptions& options = {});

struct BoundReport {
  GtZeroResult gt0;
  std::int64_t t = 0;
  double log_factor = 0.0;  // ln(beta t)^{-2c}
  double lower_bound = 0.0;
  std::vector<std::string> warnings;
};

// alpha g (ln(beta t))^{-2c}.
double lower_bound_formula(const BoundParams& params, double g, double t);

// The same bound assembled from word lengths l_{0,m} = N / gap_m:
// (1/(32k)) sum_m l_{0,m}^{-2} [2 ln(1/(c_s eps0))]^{2c} ln^{-2c}(4Ct/c_s^2).
double lower_bound_via_lengths(const BoundParams& params, int k,
                               const std::vector<double>& gaps, double t);

// Requires t >= t0 unless a t_override is set (then only warns), and
// beta t > 1 (warns when beta t <= e).
BoundReport main_lower_bound(const GateSet& set, double eps0, std::int64_t t,
                             const GtZeroOptions& options = {});

// Bound assembly for a g value computed elsewhere; same checks on t.
BoundReport bound_from_g(const BoundParams& params, double g, std::int64_t t,
                         bool override_scale);

// (sqrt(2(1 - i/d_lambda)) - C ||lambda||_1 eps) / l, inside the validity
// window 0 < eps <= sqrt(2(1 - i/d_lambda)) / (C ||lambda||_1).
double b_coefficient(const IrrepMeta& meta, double eps, std::int64_t length);

struct BBounds {
  double strong;
  double weak;
};

// strong = (1/(8k)) sum b_m^2, weak = ((k-1)/(8k)) b_last^2. The list must
// be nonincreasing in absolute value, which makes strong >= weak.
BBounds gap_bound_from_b(const std::vector<double>& b, int k);

// (1/(8k)) sum_m (1 - 2 C t eps_m)^2 / diam_m^2 over (eps_m, diam_m) pairs,
// each eps_m in (0, 1/(2Ct)] and below 1.
double gap_bound_from_diameter(int d, std::int64_t t, int k,
                               const std::vector<std::pair<double, double>>& terms);

// (d^2 - 1)/gap ln(1/eps) + B.
double net_length_thm2(int d, double gap, double eps);

struct ScaleLength {
  double length;
  std::int64_t required_t;
};

// length_numerator(d, eps) / gap_t, together with the scale it needs.
ScaleLength net_length_scale_bound(int d, double gap_t, double eps);

}  // namespace gapforge

#endif  // GAPFORGE_BOUNDS_H_
