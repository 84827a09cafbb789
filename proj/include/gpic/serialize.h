// Copyright 2026 The gpic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPIC_SERIALIZE_H
#define GPIC_SERIALIZE_H

#include <iosfwd>
#include <string_view>

#include "json.hpp"

#include "gpic/budget.h"
#include "gpic/circuits.h"
#include "gpic/composition.h"

namespace gpic {

/// Version stamped into every JSON report as "schema_version".
inline constexpr int kSchemaVersion = 1;

/// Reads a composition tree:
///   {"kind": "leaf", "eps": 0.01, "qubits": 1, "label": "T1"}
///   {"kind": "product" | "tensor", "children": [...]}   // children[0] applied first
/// Structural and semantic problems raise TreeError naming the node path.
CompositionTree tree_from_json(const nlohmann::json &j);
CompositionTree parse_tree(std::string_view text);
nlohmann::json to_json(const CompositionTree &tree);

nlohmann::json to_json(const CostModel &model);
nlohmann::json to_json(const BudgetSolution &solution);
nlohmann::json to_json(const OptimalityReport &report);
nlohmann::json to_json(const AqftReport &report);
nlohmann::json to_json(const QpeReport &report);

/// One row per rotation order k: k, count, kept, error_gpi, error_opnorm.
void write_aqft_csv(std::ostream &out, const AqftReport &report);

}  // namespace gpic

#endif
