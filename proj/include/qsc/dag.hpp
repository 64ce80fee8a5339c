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

#include <vector>

#include "qsc/circuit.hpp"
#include "qsc/graph.hpp"

namespace qsc {

/// Dependency DAG over a circuit's instructions. Node i holds
/// instruction i; an edge u -> v means v consumes a wire (qubit or
/// clbit) last written by u.
struct CircuitDAG {
    std::vector<Instruction> nodes;
    std::vector<std::vector<int>> successors;
    std::vector<std::vector<int>> predecessors;
    std::vector<Register> qregs;
    std::vector<Register> cregs;

    [[nodiscard]] int num_nodes() const { return static_cast<int>(nodes.size()); }
    /// Nodes with no predecessors (the initial front layer).
    [[nodiscard]] std::vector<int> front() const;
    /// A topological order (stable: original instruction order).
    [[nodiscard]] std::vector<int> topological_order() const;
};

CircuitDAG to_dag(const Circuit& circuit);
Circuit from_dag(const CircuitDAG& dag);

/// Weighted interaction graph: nodes are qubits touched by gates; each
/// two-qubit gate adds 1 to its edge; an n-qubit gate (n > 2) adds 1 to
/// every edge of its clique.
WeightedGraph circuit_weighted_graph(const Circuit& circuit);

}  // namespace qsc
