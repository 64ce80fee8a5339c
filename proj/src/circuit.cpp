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

#include "qsc/circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsc/gates.hpp"

namespace qsc {

Instruction Instruction::gate(std::string name, std::vector<int> qubits,
                              std::vector<ParamExpr> params) {
    Instruction in;
    in.kind = InstrKind::Gate;
    in.name = std::move(name);
    in.qubits = std::move(qubits);
    in.params = std::move(params);
    return in;
}

Instruction Instruction::barrier(std::vector<int> qubits) {
    Instruction in;
    in.kind = InstrKind::Barrier;
    in.name = "barrier";
    in.qubits = std::move(qubits);
    return in;
}

Instruction Instruction::measure(int qubit, int clbit) {
    Instruction in;
    in.kind = InstrKind::Measure;
    in.name = "measure";
    in.qubits = {qubit};
    in.clbits = {clbit};
    return in;
}

bool Instruction::operator==(const Instruction& rhs) const {
    return kind == rhs.kind && name == rhs.name && qubits == rhs.qubits &&
           clbits == rhs.clbits && params == rhs.params;
}

int Circuit::num_qubits() const {
    int n = 0;
    for (const auto& r : qregs) {
        n += r.size;
    }
    return n;
}

int Circuit::num_clbits() const {
    int n = 0;
    for (const auto& r : cregs) {
        n += r.size;
    }
    return n;
}

std::map<int, int> Circuit::gate_counts() const {
    std::map<int, int> counts;
    for (const auto& in : instructions) {
        if (in.kind == InstrKind::Gate) {
            counts[static_cast<int>(in.qubits.size())]++;
        }
    }
    return counts;
}

int Circuit::depth() const {
    std::vector<int> layer(num_qubits(), 0);
    int depth = 0;
    for (const auto& in : instructions) {
        if (in.kind != InstrKind::Gate) {
            continue;
        }
        int l = 0;
        for (int q : in.qubits) {
            l = std::max(l, layer[q]);
        }
        for (int q : in.qubits) {
            layer[q] = l + 1;
        }
        depth = std::max(depth, l + 1);
    }
    return depth;
}

bool Circuit::is_bound() const {
    return std::ranges::all_of(instructions, [](const Instruction& in) {
        return std::ranges::all_of(in.params,
                                   [](const ParamExpr& p) { return p.is_literal(); });
    });
}

std::vector<bool> Circuit::used_qubits() const {
    std::vector<bool> used(num_qubits(), false);
    for (const auto& in : instructions) {
        if (in.kind == InstrKind::Barrier) {
            continue;
        }
        for (int q : in.qubits) {
            used[q] = true;
        }
    }
    return used;
}

bool Circuit::operator==(const Circuit& rhs) const {
    return qregs == rhs.qregs && cregs == rhs.cregs &&
           instructions == rhs.instructions;
}

void Circuit::validate() const {
    const int nq = num_qubits();
    const int nc = num_clbits();
    for (const auto& in : instructions) {
        for (int q : in.qubits) {
            if (q < 0 || q >= nq) {
                throw std::runtime_error("qubit index out of range: " + std::to_string(q));
            }
        }
        for (int c : in.clbits) {
            if (c < 0 || c >= nc) {
                throw std::runtime_error("clbit index out of range: " + std::to_string(c));
            }
        }
        if (in.kind == InstrKind::Gate) {
            const GateInfo* info = gate_info(in.name);
            if (info == nullptr) {
                throw std::runtime_error("unknown gate: " + in.name);
            }
            if (static_cast<int>(in.qubits.size()) != info->num_qubits ||
                static_cast<int>(in.params.size()) != info->num_params) {
                throw std::runtime_error("bad arity for gate: " + in.name);
            }
        }
        if (in.kind == InstrKind::Measure &&
            (in.qubits.size() != 1 || in.clbits.size() != 1)) {
            throw std::runtime_error("measure takes one qubit and one clbit");
        }
    }
}

Circuit make_circuit(int num_qubits, int num_clbits) {
    Circuit c;
    if (num_qubits > 0) {
        c.qregs.push_back({"q", num_qubits});
    }
    if (num_clbits > 0) {
        c.cregs.push_back({"c", num_clbits});
    }
    return c;
}

}  // namespace qsc
