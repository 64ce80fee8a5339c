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

#include "qsc/dag.hpp"

#include <algorithm>
#include <map>

namespace qsc {

std::vector<int> CircuitDAG::front() const {
    std::vector<int> out;
    for (int i = 0; i < num_nodes(); i++) {
        if (predecessors[i].empty()) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<int> CircuitDAG::topological_order() const {
    // Instructions are appended in dependency order, so identity works;
    // kept explicit so callers do not rely on that invariant.
    std::vector<int> indegree(num_nodes());
    for (int i = 0; i < num_nodes(); i++) {
        indegree[i] = static_cast<int>(predecessors[i].size());
    }
    std::vector<int> ready;
    for (int i = num_nodes() - 1; i >= 0; i--) {
        if (indegree[i] == 0) {
            ready.push_back(i);
        }
    }
    std::vector<int> order;
    order.reserve(num_nodes());
    while (!ready.empty()) {
        // Smallest index first keeps the order stable.
        auto it = std::min_element(ready.begin(), ready.end());
        int u = *it;
        ready.erase(it);
        order.push_back(u);
        for (int v : successors[u]) {
            if (--indegree[v] == 0) {
                ready.push_back(v);
            }
        }
    }
    return order;
}

CircuitDAG to_dag(const Circuit& circuit) {
    CircuitDAG dag;
    dag.nodes = circuit.instructions;
    dag.qregs = circuit.qregs;
    dag.cregs = circuit.cregs;
    const int n = dag.num_nodes();
    dag.successors.resize(n);
    dag.predecessors.resize(n);
    std::map<int, int> last_on_qubit;
    std::map<int, int> last_on_clbit;
    auto link = [&dag](int u, int v) {
        if (std::ranges::find(dag.successors[u], v) == dag.successors[u].end()) {
            dag.successors[u].push_back(v);
            dag.predecessors[v].push_back(u);
        }
    };
    for (int i = 0; i < n; i++) {
        for (int q : dag.nodes[i].qubits) {
            auto it = last_on_qubit.find(q);
            if (it != last_on_qubit.end()) {
                link(it->second, i);
            }
            last_on_qubit[q] = i;
        }
        for (int c : dag.nodes[i].clbits) {
            auto it = last_on_clbit.find(c);
            if (it != last_on_clbit.end()) {
                link(it->second, i);
            }
            last_on_clbit[c] = i;
        }
    }
    return dag;
}

Circuit from_dag(const CircuitDAG& dag) {
    Circuit c;
    c.qregs = dag.qregs;
    c.cregs = dag.cregs;
    for (int i : dag.topological_order()) {
        c.instructions.push_back(dag.nodes[i]);
    }
    return c;
}

WeightedGraph circuit_weighted_graph(const Circuit& circuit) {
    WeightedGraph g;
    for (const auto& in : circuit.instructions) {
        if (in.kind != InstrKind::Gate) {
            continue;
        }
        for (int q : in.qubits) {
            g.add_node(q);
        }
        for (size_t a = 0; a < in.qubits.size(); a++) {
            for (size_t b = a + 1; b < in.qubits.size(); b++) {
                g.add_edge_weight(in.qubits[a], in.qubits[b], 1.0);
            }
        }
    }
    return g;
}

}  // namespace qsc
