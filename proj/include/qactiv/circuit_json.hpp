// Copyright 2026 The qactiv authors
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

#pragma once

#include <json.hpp>

#include "qactiv/gates.hpp"

namespace qactiv {

// {"format": "qactiv-circuit", "version": 1, "qubit_count": n,
//  "roles": [...], "gates": [{"kind": ..., "operands": [...], "param"?}]}
nlohmann::json circuit_to_json(const Circuit& circuit);

// Throws ParseError on malformed documents; the result is validated.
Circuit circuit_from_json(const nlohmann::json& doc);

}  // namespace qactiv
