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

#include "gapforge/serialize.h"

namespace gapforge {

const char* version() { return GAPFORGE_VERSION; }

Json to_json(const Weight& w) {
  Json out = Json::array();
  for (int x : w.entries()) out.push_back(x);
  return out;
}

Json to_json(const IrrepMeta& meta) {
  return {{"weight", to_json(meta.weight)},
          {"dim", meta.dim},
          {"fs_indicator", meta.fs_indicator},
          {"one_norm", meta.one_norm}};
}

Json to_json(const GapReport& report, bool per_irrep) {
  Json out;
  out["t"] = report.t;
  out["gap"] = report.gap;
  out["worst_weight"] = to_json(report.worst_weight);
  if (per_irrep) {
    Json norms = Json::array();
    for (const BlockNorm& b : report.per_weight) {
      norms.push_back({{"weight", to_json(b.weight)},
                       {"dim", b.dim},
                       {"norm", b.norm},
                       {"iterations", b.iterations},
                       {"dense", b.dense}});
    }
    out["per_weight_norms"] = std::move(norms);
  }
  return out;
}

Json to_json(const BoundParams& p) {
  Json out;
  out["d"] = p.d;
  out["eps0"] = p.eps0;
  out["c"] = p.c;
  out["c_s"] = p.c_s;
  out["C"] = p.C;
  out["C_b"] = p.C_b;
  out["t0"] = p.t0;
  out["alpha"] = p.alpha;
  out["beta"] = p.beta;
  out["warnings"] = p.warnings;
  return out;
}

Json to_json(const TableRow& row) {
  return {{"d", row.d},
          {"eps0", row.eps0},
          {"t0", row.t0},
          {"alpha", format_alpha(row.alpha)},
          {"beta", format_beta(row.beta)},
          {"minimal", row.minimal}};
}

Json to_json(const SubsetGapTable& table) {
  Json per_m = Json::array();
  for (std::size_t m = 0; m < table.per_m.size(); ++m) {
    const SubsetGap& s = table.per_m[m];
    per_m.push_back({{"m", m},
                     {"min_gap", s.min_gap},
                     {"worst_subset", s.worst_subset},
                     {"subsets", s.subsets}});
  }
  return {{"t0", table.t0}, {"k", table.k}, {"per_m", std::move(per_m)}};
}

Json to_json(const UniversalityReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"t_probe", r.t_probe},
          {"max_norm", r.max_norm},
          {"worst_weight", r.worst_weight},
          {"invariant_residual", r.invariant_residual}};
}

Json to_json(const GtZeroResult& r) {
  Json out;
  out["params"] = to_json(r.params);
  out["g_t0"] = r.g;
  out["scale"] = r.table.t0;
  out["below_theorem_scale"] = r.below_theorem_scale;
  out["subset_gaps"] = to_json(r.table);
  Json pairs = Json::array();
  for (const PairVerdict& p : r.universality) {
    pairs.push_back(
        {{"pair", {p.first, p.second}}, {"heuristic", to_json(p.report)}});
  }
  out["universality"] = std::move(pairs);
  out["warnings"] = r.warnings;
  return out;
}

Json to_json(const BoundReport& r) {
  Json out;
  out["params"] = to_json(r.gt0.params);
  out["g_t0"] = r.gt0.g;
  out["t"] = r.t;
  out["log_factor"] = r.log_factor;
  out["lower_bound"] = r.lower_bound;
  out["scale"] = r.gt0.table.t0;
  out["below_theorem_scale"] = r.gt0.below_theorem_scale;
  out["subset_gaps"] = to_json(r.gt0.table);
  Json pairs = Json::array();
  for (const PairVerdict& p : r.gt0.universality) {
    pairs.push_back(
        {{"pair", {p.first, p.second}}, {"heuristic", to_json(p.report)}});
  }
  out["universality"] = std::move(pairs);
  out["warnings"] = r.warnings;
  return out;
}

Json to_json(const NetEstimate& e) {
  return {{"length", e.length},
          {"eps", e.eps},
          {"samples", e.samples},
          {"words", e.words},
          {"covered_fraction", e.covered_fraction},
          {"max_observed_distance", e.max_observed_distance},
          {"warnings", e.warnings}};
}

Json make_document(const Json& config, Json result) {
  Json doc;
  doc["version"] = version();
  doc["config"] = config;
  doc["result"] = std::move(result);
  return doc;
}

}  // namespace gapforge
