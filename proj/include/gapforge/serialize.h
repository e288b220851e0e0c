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

#ifndef GAPFORGE_SERIALIZE_H_
#define GAPFORGE_SERIALIZE_H_

#include <string>
#include <vector>

#include <json.hpp>

#include "gapforge/avgop.h"
#include "gapforge/bounds.h"
#include "gapforge/constants.h"
#include "gapforge/gates.h"
#include "gapforge/weights.h"

namespace gapforge {

using Json = nlohmann::ordered_json;

const char* version();

Json to_json(const Weight& w);
Json to_json(const IrrepMeta& meta);
Json to_json(const GapReport& report, bool per_irrep = true);
Json to_json(const BoundParams& params);
Json to_json(const TableRow& row);
Json to_json(const SubsetGapTable& table);
Json to_json(const UniversalityReport& report);
Json to_json(const GtZeroResult& result);
Json to_json(const BoundReport& report);
Json to_json(const NetEstimate& estimate);

// Top-level document: {"version", "config", "result"}.
Json make_document(const Json& config, Json result);

}  // namespace gapforge

#endif  // GAPFORGE_SERIALIZE_H_
