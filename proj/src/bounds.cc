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

#include "gapforge/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "gapforge/error.h"

namespace gapforge {
namespace {

// Calls fn on every m-element subset of {0..k-1} in lexicographic order.
template <typename Fn>
void for_each_combination(int k, int m, Fn&& fn) {
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    int i = m - 1;
    while (i >= 0 && idx[i] == k - m + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void require_positive_gap(double gap) {
  if (!(gap > 0 && gap <= 1)) throw DomainError("gap must lie in (0, 1]");
}

void require_eps(double eps) {
  if (!(eps > 0 && eps < 1)) throw DomainError("eps must lie in (0, 1)");
}

// The largest irrep at scale t; checked before enumerating Lambda_t.
void require_within_cap(int d, std::int64_t t, std::uint64_t cap) {
  if (t > 1'000'000) {
    throw ResourceError("scale " + std::to_string(t) +
                        " is far beyond desk scale; use a t override");
  }
  std::vector<int> top(d, 0);
  top[0] = static_cast<int>(t);
  top[d - 1] = -static_cast<int>(t);
  std::uint64_t dim = 0;
  try {
    dim = weyl_dimension(Weight(top));
  } catch (const ResourceError&) {
    dim = cap + 1;
  }
  if (dim > cap) {
    throw ResourceError("scale " + std::to_string(t) +
                        " needs irreps of dimension " + std::to_string(dim) +
                        " above the cap " + std::to_string(cap) +
                        "; use a t override for desk-scale runs");
  }
}

}  // namespace

GateSet subset_squares(const GateSet& set, const std::vector<int>& removed) {
  if (!set.symmetric()) {
    throw DomainError("subset_squares needs a gate set with implicit inverses");
  }
  const int k = static_cast<int>(set.gates().size());
  std::set<int> drop;
  for (int i : removed) {
    if (i < 0 || i >= k) throw DomainError("removed index out of range");
    if (!drop.insert(i).second) throw DomainError("removed indices repeat");
  }
  if (static_cast<int>(drop.size()) > k - 2) {
    throw DomainError("at most k-2 pairs may be removed");
  }
  std::vector<Gate> kept;
  for (int i = 0; i < k; ++i) {
    if (drop.count(i)) continue;
    const Gate& g = set.gates()[i];
    kept.push_back({g.label + "^2", g.matrix * g.matrix});
  }
  return GateSet(set.d(), std::move(kept), true);
}

GtZeroResult g_t0(const GateSet& input, double eps0,
                  const GtZeroOptions& options) {
  GateSet set = input;
  if (!set.symmetric()) {
    if (!options.gap.auto_symmetrize) {
      throw DomainError(
          "g_t0 needs a gate set with implicit inverses; enable "
          "auto-symmetrize");
    }
    set = symmetrized(input);
  }
  const int k = static_cast<int>(set.gates().size());
  if (k < 2) throw DomainError("g_t0 needs at least two generator pairs");

  GtZeroResult out;
  out.params = make_bound_params(set.d(), eps0);
  out.warnings = out.params.warnings;
  std::int64_t scale = out.params.t0;
  if (options.t_override) {
    if (*options.t_override < 1) throw DomainError("t override must be >= 1");
    scale = *options.t_override;
    out.below_theorem_scale = scale < out.params.t0;
    if (out.below_theorem_scale) {
      out.warnings.push_back("gaps computed at t = " + std::to_string(scale) +
                             " below t0 = " + std::to_string(out.params.t0) +
                             "; the bound is not certified");
    }
  }
  BasisCache& cache =
      options.gap.cache ? *options.gap.cache : BasisCache::global();
  require_within_cap(set.d(), scale, cache.dimension_cap());

  if (options.check_universality) {
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        std::vector<int> removed;
        for (int r = 0; r < k; ++r) {
          if (r != i && r != j) removed.push_back(r);
        }
        UniversalityReport rep = universality_heuristic(
            subset_squares(set, removed), options.universality_probe);
        if (rep.verdict != Universality::kLikely) {
          out.warnings.push_back("squared pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is " +
                                 to_string(rep.verdict));
        }
        out.universality.push_back({i, j, rep});
      }
    }
  }

  out.table.t0 = scale;
  out.table.k = k;
  double sum = 0.0;
  for (int m = 0; m <= k - 2; ++m) {
    SubsetGap entry;
    entry.min_gap = std::numeric_limits<double>::infinity();
    for_each_combination(k, m, [&](const std::vector<int>& removed) {
      GapReport rep = gap_at_scale(subset_squares(set, removed),
                                   static_cast<int>(scale), options.gap);
      ++entry.subsets;
      if (rep.gap < entry.min_gap) {
        entry.min_gap = rep.gap;
        entry.worst_subset = removed;
      }
    });
    sum += entry.min_gap * entry.min_gap;
    out.table.per_m.push_back(std::move(entry));
  }
  out.g = sum / static_cast<double>(set.size());
  return out;
}

double lower_bound_formula(const BoundParams& params, double g, double t) {
  const double log_bt = std::log(params.beta * t);
  if (!(log_bt > 0)) throw DomainError("beta t must exceed 1");
  return params.alpha * g * std::pow(log_bt, -2 * params.c);
}

double lower_bound_via_lengths(const BoundParams& params, int k,
                               const std::vector<double>& gaps, double t) {
  const double N = length_numerator(params.d, params.eps0);
  const double head =
      std::pow(2 * std::log(1 / (params.c_s * params.eps0)), 2 * params.c);
  const double tail =
      std::pow(std::log(4 * params.C * t / (params.c_s * params.c_s)),
               -2 * params.c);
  double sum = 0.0;
  for (double gap : gaps) {
    if (gap <= 0) continue;
    const double length = N / gap;
    sum += head * tail / (length * length);
  }
  return sum / (32.0 * k);
}

BoundReport bound_from_g(const BoundParams& params, double g, std::int64_t t,
                         bool override_scale) {
  BoundReport report;
  report.t = t;
  if (t < params.t0) {
    if (!override_scale) {
      throw DomainError("t = " + std::to_string(t) + " is below t0 = " +
                        std::to_string(params.t0));
    }
    report.warnings.push_back("t below t0; the bound is outside its domain");
  }
  const double bt = params.beta * static_cast<double>(t);
  if (!(bt > 1)) throw DomainError("beta t must exceed 1");
  if (bt <= std::exp(1.0)) {
    report.warnings.push_back("beta t <= e; the log factor exceeds one");
  }
  report.log_factor = std::pow(std::log(bt), -2 * params.c);
  report.lower_bound = lower_bound_formula(params, g, static_cast<double>(t));
  return report;
}

BoundReport main_lower_bound(const GateSet& set, double eps0, std::int64_t t,
                             const GtZeroOptions& options) {
  GtZeroResult gt0 = g_t0(set, eps0, options);
  BoundReport report =
      bound_from_g(gt0.params, gt0.g, t, options.t_override.has_value());
  report.warnings.insert(report.warnings.begin(), gt0.warnings.begin(),
                         gt0.warnings.end());
  report.gt0 = std::move(gt0);
  return report;
}

double b_coefficient(const IrrepMeta& meta, double eps, std::int64_t length) {
  if (meta.one_norm == 0) throw DomainError("b is undefined for the trivial irrep");
  if (length < 1) throw DomainError("word length must be positive");
  const double root =
      std::sqrt(2 * (1 - static_cast<double>(meta.fs_indicator) /
                             static_cast<double>(meta.dim)));
  const double limit = root / (kC * meta.one_norm);
  if (!(eps > 0 && eps < 1) || eps > limit * (1 + 1e-12)) {
    throw DomainError("eps outside the validity window (0, " +
                      std::to_string(limit) + "]");
  }
  return std::max(0.0, root - kC * meta.one_norm * eps) /
         static_cast<double>(length);
}

BBounds gap_bound_from_b(const std::vector<double>& b, int k) {
  if (k < 2) throw DomainError("need k >= 2");
  if (b.empty()) throw DomainError("empty b list");
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (std::abs(b[i]) > std::abs(b[i - 1])) {
      throw DomainError("b list must be nonincreasing");
    }
  }
  double sum = 0.0;
  for (double x : b) sum += x * x;
  BBounds out;
  out.strong = sum / (8.0 * k);
  out.weak = (k - 1) / (8.0 * k) * b.back() * b.back();
  return out;
}

double gap_bound_from_diameter(
    int d, std::int64_t t, int k,
    const std::vector<std::pair<double, double>>& terms) {
  if (d < 2) throw DomainError("dimension d must be at least 2");
  if (t < 1 || k < 2) throw DomainError("need t >= 1 and k >= 2");
  const double limit = 1 / (2 * kC * static_cast<double>(t));
  double sum = 0.0;
  for (const auto& [eps, diam] : terms) {
    if (!(eps > 0 && eps < 1) || eps > limit * (1 + 1e-12)) {
      throw DomainError("eps_m outside (0, 1/(2Ct)]");
    }
    if (!(diam > 0)) throw DomainError("diameter must be positive");
    const double f = std::max(0.0, 1 - 2 * kC * static_cast<double>(t) * eps);
    sum += f * f / (diam * diam);
  }
  return sum / (8.0 * k);
}

double net_length_thm2(int d, double gap, double eps) {
  require_eps(eps);
  Theorem2Constants c = theorem2_constants(d, gap);
  return c.slope * std::log(1 / eps) + c.offset;
}

ScaleLength net_length_scale_bound(int d, double gap_t, double eps) {
  require_positive_gap(gap_t);
  require_eps(eps);
  return {length_numerator(d, eps) / gap_t, scale_t0(eps, d)};
}

}  // namespace gapforge
