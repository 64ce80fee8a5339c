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

#include "qsc/metrics.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace qsc {

VerificationResult verify_program(const Circuit& circuit,
                                  const Backend& backend) {
    VerificationResult result;
    auto fail = [&result](const std::string& id, const std::string& msg) {
        result.ok = false;
        result.violations.emplace_back(id, msg);
    };

    if (circuit.num_qubits() > backend.qubits_num) {
        fail("qubit_count",
             "circuit uses " + std::to_string(circuit.num_qubits()) +
                 " qubits but the backend has " +
                 std::to_string(backend.qubits_num));
    }

    std::set<std::pair<int, int>> bad_pairs;
    for (const auto& instr : circuit.instructions) {
        if (instr.kind != InstrKind::Gate || instr.qubits.size() != 2) {
            continue;
        }
        const int a = instr.qubits[0];
        const int b = instr.qubits[1];
        if (!backend.has_edge(a, b)) {
            bad_pairs.emplace(std::min(a, b), std::max(a, b));
        }
    }
    for (const auto& [a, b] : bad_pairs) {
        fail("coupling", "no coupling between qubits " + std::to_string(a) +
                             " and " + std::to_string(b));
    }

    if (backend.max_gate_count.has_value()) {
        int gates = 0;
        for (const auto& [arity, count] : circuit.gate_counts()) {
            gates += count;
        }
        if (gates > *backend.max_gate_count) {
            fail("gate_count", "circuit has " + std::to_string(gates) +
                                   " gates but the backend allows " +
                                   std::to_string(*backend.max_gate_count));
        }
    }

    bool any_gate = false;
    for (const auto& instr : circuit.instructions) {
        if (instr.kind == InstrKind::Gate) {
            any_gate = true;
            break;
        }
    }
    if (!any_gate) {
        fail("non_empty", "circuit contains no gates");
    }
    return result;
}

double hellinger_fidelity(const Distribution& p_exp,
                          const Distribution& p_ideal) {
    double bc = 0.0;  // Bhattacharyya coefficient
    for (const auto& [key, p] : p_exp) {
        auto it = p_ideal.find(key);
        if (it == p_ideal.end()) {
            continue;
        }
        if (p < 0.0 || it->second < 0.0) {
            throw std::runtime_error("negative probability in distribution");
        }
        bc += std::sqrt(p * it->second);
    }
    const double d2 = 1.0 - bc;  // squared Hellinger distance
    return (1.0 - d2) * (1.0 - d2);
}

double circuit_cost(const Circuit& circuit, const Backend& backend, double k) {
    if (k <= 0.0 || k > 1.0) {
        throw std::runtime_error("decoherence factor must lie in (0, 1]");
    }
    const double f1 = backend.average_single_fidelity();
    const WeightedGraph coupling = backend.coupling_graph();
    double cost = -static_cast<double>(circuit.depth()) * std::log(k);
    for (const auto& instr : circuit.instructions) {
        if (instr.kind != InstrKind::Gate) {
            continue;
        }
        if (instr.qubits.size() == 1) {
            cost -= std::log(f1);
        } else if (instr.qubits.size() == 2) {
            const int a = instr.qubits[0];
            const int b = instr.qubits[1];
            if (!backend.has_edge(a, b)) {
                throw std::runtime_error(
                    "circuit_cost: two-qubit gate on uncoupled qubits " +
                    std::to_string(a) + "," + std::to_string(b));
            }
            cost -= std::log(coupling.edge_weight(a, b));
        } else {
            throw std::runtime_error(
                "circuit_cost requires a one- and two-qubit circuit");
        }
    }
    return cost;
}

}  // namespace qsc
