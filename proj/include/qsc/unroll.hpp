// Copyright 2026 The QSC Authors
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

#include <set>
#include <string>

#include "qsc/dag.hpp"

namespace qsc {

/// Expand ccx/cswap so no gate touches more than two qubits.
CircuitDAG unroll_to_two_qubit(const CircuitDAG& dag);

/// Rewrite every gate into the basis. Requires basis to contain
/// {rx, ry, rz} and one of {cx, cz}; named identities (swap -> 3 cx,
/// cz -> h cx h, ...) are tried first, then matrix synthesis for bound
/// gates. Symbolic parameters survive through parameter-linear rules.
CircuitDAG unroll_to_basis(const CircuitDAG& dag,
                           const std::set<std::string>& basis);

}  // namespace qsc
