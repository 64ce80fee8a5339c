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

#include "qsc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qsc/gates.hpp"
#include "qsc/synthesis.hpp"

namespace qsc {

namespace {

/// Gates whose repeated application adds angles.
bool additive_rotation(const std::string& name) {
    static const std::set<std::string> names = {"rx",  "ry",  "rz",  "rxx",
                                                "ryy", "rzz", "crx", "cry",
                                                "crz", "cp",  "u1"};
    return names.count(name) > 0;
}

bool inverse_pair(const Instruction& a, const Instruction& b) {
    if (a.kind != InstrKind::Gate || b.kind != InstrKind::Gate ||
        a.qubits != b.qubits || !a.params.empty() || !b.params.empty()) {
        return false;
    }
    const GateInfo* info = gate_info(a.name);
    if (info == nullptr) {
        return false;
    }
    return (info->self_inverse && a.name == b.name) ||
           (!info->inverse_name.empty() && info->inverse_name == b.name);
}

/// Index of the previous instruction sharing a wire with `in`, or -1.
/// Returns -2 when the wire predecessors differ (no single adjacent
/// instruction).
int adjacent_predecessor(const std::vector<Instruction>& out,
                         const Instruction& in) {
    int common = -1;
    for (int q : in.qubits) {
        int last = -1;
        for (int j = static_cast<int>(out.size()) - 1; j >= 0; j--) {
            if (std::ranges::find(out[j].qubits, q) != out[j].qubits.end()) {
                last = j;
                break;
            }
        }
        if (common == -1) {
            common = last;
        } else if (common != last) {
            return -2;
        }
    }
    return common;
}

bool all_literal(const Instruction& in) {
    return std::ranges::all_of(in.params,
                               [](const ParamExpr& p) { return p.is_literal(); });
}

/// Appends the merged rotation unless its literal angle cancels out.
bool push_merged(std::vector<Instruction>& out, Instruction merged) {
    ParamExpr angle = merged.params[0];
    if (angle.is_literal()) {
        const double v = canonical_angle(angle.value());
        if (std::abs(v) < 1e-10) {
            return false;
        }
        merged.params[0] = ParamExpr(v);
    }
    out.push_back(merged);
    return true;
}

Circuit merge_rotations(const Circuit& in) {
    Circuit out;
    out.qregs = in.qregs;
    out.cregs = in.cregs;
    out.metadata = in.metadata;
    for (const auto& instr : in.instructions) {
        bool merged = false;
        if (instr.kind == InstrKind::Gate && additive_rotation(instr.name)) {
            const int prev = adjacent_predecessor(out.instructions, instr);
            if (prev >= 0 && out.instructions[prev].kind == InstrKind::Gate &&
                out.instructions[prev].name == instr.name &&
                out.instructions[prev].qubits == instr.qubits) {
                Instruction combined = instr;
                combined.params[0] =
                    out.instructions[prev].params[0] + instr.params[0];
                out.instructions.erase(out.instructions.begin() + prev);
                push_merged(out.instructions, combined);
                merged = true;
            }
        }
        if (!merged) {
            out.instructions.push_back(instr);
        }
    }
    return out;
}

Circuit fuse_literal_runs(const Circuit& in) {
    const int n = static_cast<int>(in.instructions.size());
    std::vector<bool> consumed(n, false);
    std::vector<std::vector<Instruction>> replacement(n);
    // A run = consecutive wire-adjacent 1q literal gates on one qubit.
    for (int i = 0; i < n; i++) {
        const auto& first = in.instructions[i];
        if (consumed[i] || first.kind != InstrKind::Gate ||
            first.qubits.size() != 1 || !all_literal(first)) {
            continue;
        }
        const int q = first.qubits[0];
        std::vector<int> run = {i};
        for (int j = i + 1; j < n; j++) {
            const auto& next = in.instructions[j];
            if (std::ranges::find(next.qubits, q) == next.qubits.end()) {
                continue;
            }
            if (next.kind == InstrKind::Gate && next.qubits.size() == 1 &&
                all_literal(next)) {
                run.push_back(j);
            } else {
                break;
            }
        }
        if (run.size() < 2) {
            continue;
        }
        Matrix2 u = Matrix2::Identity();
        for (int idx : run) {
            const auto& g = in.instructions[idx];
            std::vector<double> params;
            for (const auto& p : g.params) {
                params.push_back(p.value());
            }
            u = (gate_matrix(g.name, params) * u).eval();
        }
        for (int idx : run) {
            consumed[idx] = true;
        }
        replacement[run.front()] = synthesize_one_qubit(u, q);
    }
    Circuit out;
    out.qregs = in.qregs;
    out.cregs = in.cregs;
    out.metadata = in.metadata;
    for (int i = 0; i < n; i++) {
        if (!replacement[i].empty() || consumed[i]) {
            for (const auto& g : replacement[i]) {
                out.instructions.push_back(g);
            }
            continue;
        }
        out.instructions.push_back(in.instructions[i]);
    }
    return out;
}

}  // namespace

CircuitDAG cancel_inverses(const CircuitDAG& dag) {
    Circuit c = from_dag(dag);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Instruction> out;
        for (const auto& instr : c.instructions) {
            if (instr.kind == InstrKind::Gate) {
                const int prev = adjacent_predecessor(out, instr);
                if (prev >= 0 && inverse_pair(out[prev], instr)) {
                    out.erase(out.begin() + prev);
                    changed = true;
                    continue;
                }
            }
            out.push_back(instr);
        }
        c.instructions = out;
    }
    return to_dag(c);
}

CircuitDAG fuse_1q(const CircuitDAG& dag) {
    Circuit c = from_dag(dag);
    c = merge_rotations(c);
    c = fuse_literal_runs(c);
    return to_dag(c);
}

CircuitDAG substitute_params(const CircuitDAG& dag,
                             const std::map<std::string, double>& bindings) {
    Circuit c = from_dag(dag);
    for (auto& instr : c.instructions) {
        for (auto& p : instr.params) {
            p = p.substituted(bindings);
        }
    }
    return to_dag(c);
}

}  // namespace qsc
