// Copyright 2026 The lmc Authors
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


#ifndef LMC_JSON_IO_H
#define LMC_JSON_IO_H

#include <json.hpp>

#include "lmc/classical.h"
#include "lmc/hamiltonian.h"
#include "lmc/optimize.h"
#include "lmc/qaoa_engine.h"

namespace lmc {

using Json = nlohmann::ordered_json;

/// {"num_qubits", "terms": [{"subset": [...], "weight"}]}; the identity
/// coefficient appears as the entry with an empty subset.
Json to_json(const DiagonalHamiltonian &h);
DiagonalHamiltonian hamiltonian_from_json(const Json &j);

/// Complex numbers are written as [re, im], subsets as sorted vertex arrays.
Json to_json(const ZkBreakdown &b);
Json to_json(const ClassicalParams &params);
Json to_json(const RunStats &stats, bool include_counts = false);
Json to_json(const OptimizationReport &report);

}  // namespace lmc

#endif
