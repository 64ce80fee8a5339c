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

#include "qsc/standardize.hpp"

#include <algorithm>
#include <set>

namespace qsc {

Circuit complete_measurements(const Circuit& circuit) {
    // Measured qubits in measure order; gate-touched qubits when no
    // measure exists (declared-but-idle qubits are not measured).
    std::vector<int> measured;
    for (const auto& in : circuit.instructions) {
        if (in.kind == InstrKind::Measure &&
            std::ranges::find(measured, in.qubits[0]) == measured.end()) {
            measured.push_back(in.qubits[0]);
        }
    }
    if (measured.empty()) {
        std::set<int> touched;
        for (const auto& in : circuit.instructions) {
            if (in.kind == InstrKind::Gate) {
                touched.insert(in.qubits.begin(), in.qubits.end());
            }
        }
        measured.assign(touched.begin(), touched.end());
    }

    Circuit out;
    out.qregs = circuit.qregs;
    out.metadata = circuit.metadata;
    if (!measured.empty()) {
        std::string creg_name =
            circuit.cregs.empty() ? "c" : circuit.cregs.front().name;
        out.cregs.push_back({creg_name, static_cast<int>(measured.size())});
    }
    for (const auto& in : circuit.instructions) {
        if (in.kind != InstrKind::Measure) {
            out.instructions.push_back(in);
        }
    }
    for (size_t i = 0; i < measured.size(); i++) {
        out.instructions.push_back(
            Instruction::measure(measured[i], static_cast<int>(i)));
    }
    return out;
}

Circuit insert_barriers(const Circuit& circuit) {
    // Locate the trailing measurement block.
    size_t block = circuit.instructions.size();
    while (block > 0 &&
           circuit.instructions[block - 1].kind == InstrKind::Measure) {
        block--;
    }
    if (block == circuit.instructions.size()) {
        return circuit;
    }
    std::set<int> measured;
    for (size_t i = block; i < circuit.instructions.size(); i++) {
        measured.insert(circuit.instructions[i].qubits[0]);
    }
    // Drop barriers directly before the block, then put back exactly one.
    size_t head = block;
    while (head > 0 && circuit.instructions[head - 1].kind == InstrKind::Barrier) {
        head--;
    }
    Circuit out;
    out.qregs = circuit.qregs;
    out.cregs = circuit.cregs;
    out.metadata = circuit.metadata;
    out.instructions.assign(circuit.instructions.begin(),
                            circuit.instructions.begin() + head);
    out.instructions.push_back(
        Instruction::barrier({measured.begin(), measured.end()}));
    out.instructions.insert(out.instructions.end(),
                            circuit.instructions.begin() + block,
                            circuit.instructions.end());
    return out;
}

Circuit rename_registers(const Circuit& circuit) {
    Circuit out = circuit;
    out.qregs.clear();
    out.cregs.clear();
    if (circuit.num_qubits() > 0) {
        out.qregs.push_back({"q", circuit.num_qubits()});
    }
    if (circuit.num_clbits() > 0) {
        out.cregs.push_back({"c", circuit.num_clbits()});
    }
    return out;
}

std::pair<Circuit, std::map<int, int>> prune_idle_qubits(const Circuit& circuit) {
    std::vector<bool> used = circuit.used_qubits();
    std::map<int, int> remap;
    for (int q = 0; q < circuit.num_qubits(); q++) {
        if (used[q]) {
            int next = static_cast<int>(remap.size());
            remap[q] = next;
        }
    }
    Circuit out;
    out.cregs = circuit.cregs;
    out.metadata = circuit.metadata;
    // Shrink each register to its used qubits, dropping empty ones.
    int base = 0;
    for (const auto& r : circuit.qregs) {
        int kept = 0;
        for (int i = 0; i < r.size; i++) {
            kept += static_cast<int>(used[base + i]);
        }
        if (kept > 0) {
            out.qregs.push_back({r.name, kept});
        }
        base += r.size;
    }
    for (const auto& in : circuit.instructions) {
        Instruction copy = in;
        copy.qubits.clear();
        for (int q : in.qubits) {
            if (remap.count(q) > 0) {
                copy.qubits.push_back(remap[q]);
            }
        }
        if (in.kind == InstrKind::Barrier && copy.qubits.empty()) {
            continue;
        }
        out.instructions.push_back(copy);
    }
    return {out, remap};
}

Circuit standardize(const Circuit& circuit) {
    Circuit c = prune_idle_qubits(circuit).first;
    c = rename_registers(c);
    c = complete_measurements(c);
    return insert_barriers(c);
}

}  // namespace qsc
