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

#include "qsc/unroll.hpp"

#include <deque>
#include <numbers>
#include <stdexcept>

#include "qsc/synthesis.hpp"

namespace qsc {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Instruction> expand_ccx(int c1, int c2, int t) {
    auto g = [](const std::string& n, std::vector<int> q) {
        return Instruction::gate(n, std::move(q));
    };
    return {g("h", {t}),      g("cx", {c2, t}), g("tdg", {t}),  g("cx", {c1, t}),
            g("t", {t}),      g("cx", {c2, t}), g("tdg", {t}),  g("cx", {c1, t}),
            g("t", {c2}),     g("t", {t}),      g("h", {t}),    g("cx", {c1, c2}),
            g("t", {c1}),     g("tdg", {c2}),   g("cx", {c1, c2})};
}

std::vector<Instruction> expand_three_qubit(const Instruction& in) {
    if (in.name == "ccx") {
        return expand_ccx(in.qubits[0], in.qubits[1], in.qubits[2]);
    }
    if (in.name == "cswap") {
        const int c = in.qubits[0];
        const int a = in.qubits[1];
        const int b = in.qubits[2];
        std::vector<Instruction> out = {Instruction::gate("cx", {b, a})};
        for (auto& g : expand_ccx(c, a, b)) {
            out.push_back(g);
        }
        out.push_back(Instruction::gate("cx", {b, a}));
        return out;
    }
    throw std::runtime_error("no two-qubit expansion for gate: " + in.name);
}

/// Parameter-preserving rewrite into {cx, rx, ry, rz, h, ...} fragments;
/// empty when no symbolic-safe rule exists for the gate.
std::vector<Instruction> symbolic_rule(const Instruction& in) {
    const auto& q = in.qubits;
    auto g = [](const std::string& n, std::vector<int> qs,
                std::vector<ParamExpr> ps = {}) {
        return Instruction::gate(n, std::move(qs), std::move(ps));
    };
    if (in.name == "u1") {
        return {g("rz", {q[0]}, {in.params[0]})};
    }
    if (in.name == "u2") {
        return {g("rz", {q[0]}, {in.params[1]}),
                g("ry", {q[0]}, {ParamExpr(kPi / 2)}),
                g("rz", {q[0]}, {in.params[0]})};
    }
    if (in.name == "u3") {
        return {g("rz", {q[0]}, {in.params[2]}), g("ry", {q[0]}, {in.params[0]}),
                g("rz", {q[0]}, {in.params[1]})};
    }
    if (in.name == "rzz") {
        return {g("cx", {q[0], q[1]}), g("rz", {q[1]}, {in.params[0]}),
                g("cx", {q[0], q[1]})};
    }
    if (in.name == "rxx") {
        return {g("h", {q[0]}),  g("h", {q[1]}),
                g("cx", {q[0], q[1]}), g("rz", {q[1]}, {in.params[0]}),
                g("cx", {q[0], q[1]}), g("h", {q[0]}),
                g("h", {q[1]})};
    }
    if (in.name == "ryy") {
        return {g("rx", {q[0]}, {ParamExpr(kPi / 2)}),
                g("rx", {q[1]}, {ParamExpr(kPi / 2)}),
                g("cx", {q[0], q[1]}),
                g("rz", {q[1]}, {in.params[0]}),
                g("cx", {q[0], q[1]}),
                g("rx", {q[0]}, {ParamExpr(-kPi / 2)}),
                g("rx", {q[1]}, {ParamExpr(-kPi / 2)})};
    }
    if (in.name == "crz") {
        return {g("rz", {q[1]}, {in.params[0].scaled(0.5)}),
                g("cx", {q[0], q[1]}),
                g("rz", {q[1]}, {in.params[0].scaled(-0.5)}),
                g("cx", {q[0], q[1]})};
    }
    if (in.name == "cry") {
        return {g("ry", {q[1]}, {in.params[0].scaled(0.5)}),
                g("cx", {q[0], q[1]}),
                g("ry", {q[1]}, {in.params[0].scaled(-0.5)}),
                g("cx", {q[0], q[1]})};
    }
    if (in.name == "crx") {
        return {g("h", {q[1]}),
                g("rz", {q[1]}, {in.params[0].scaled(0.5)}),
                g("cx", {q[0], q[1]}),
                g("rz", {q[1]}, {in.params[0].scaled(-0.5)}),
                g("cx", {q[0], q[1]}),
                g("h", {q[1]})};
    }
    if (in.name == "cp") {
        return {g("rz", {q[0]}, {in.params[0].scaled(0.5)}),
                g("cx", {q[0], q[1]}),
                g("rz", {q[1]}, {in.params[0].scaled(-0.5)}),
                g("cx", {q[0], q[1]}),
                g("rz", {q[1]}, {in.params[0].scaled(0.5)})};
    }
    return {};
}

/// Exact named identities preferred over matrix synthesis.
std::vector<Instruction> named_rule(const Instruction& in,
                                    const std::set<std::string>& basis) {
    const auto& q = in.qubits;
    auto g = [](const std::string& n, std::vector<int> qs) {
        return Instruction::gate(n, std::move(qs));
    };
    if (in.name == "swap") {
        return {g("cx", {q[0], q[1]}), g("cx", {q[1], q[0]}),
                g("cx", {q[0], q[1]})};
    }
    if (in.name == "cz" && basis.count("cx") > 0) {
        return {g("h", {q[1]}), g("cx", {q[0], q[1]}), g("h", {q[1]})};
    }
    if (in.name == "cx" && basis.count("cz") > 0) {
        return {g("h", {q[1]}), g("cz", {q[0], q[1]}), g("h", {q[1]})};
    }
    if (in.name == "cy") {
        return {g("sdg", {q[1]}), g("cx", {q[0], q[1]}), g("s", {q[1]})};
    }
    return {};
}

std::vector<double> literal_params(const Instruction& in) {
    std::vector<double> out;
    out.reserve(in.params.size());
    for (const auto& p : in.params) {
        out.push_back(p.value());
    }
    return out;
}

}  // namespace

CircuitDAG unroll_to_two_qubit(const CircuitDAG& dag) {
    Circuit in = from_dag(dag);
    Circuit out;
    out.qregs = in.qregs;
    out.cregs = in.cregs;
    out.metadata = in.metadata;
    for (const auto& instr : in.instructions) {
        if (instr.kind != InstrKind::Gate || instr.qubits.size() <= 2) {
            out.instructions.push_back(instr);
            continue;
        }
        for (auto& g : expand_three_qubit(instr)) {
            out.instructions.push_back(g);
        }
    }
    return to_dag(out);
}

CircuitDAG unroll_to_basis(const CircuitDAG& dag,
                           const std::set<std::string>& basis) {
    if (basis.count("rx") == 0 || basis.count("ry") == 0 ||
        basis.count("rz") == 0 || (basis.count("cx") == 0 && basis.count("cz") == 0)) {
        throw std::runtime_error(
            "basis must contain rx, ry, rz and one of cx/cz");
    }
    Circuit in = from_dag(dag);
    Circuit out;
    out.qregs = in.qregs;
    out.cregs = in.cregs;
    out.metadata = in.metadata;
    std::deque<Instruction> work(in.instructions.begin(), in.instructions.end());
    int budget = static_cast<int>(work.size()) * 200 + 1000;
    while (!work.empty()) {
        if (--budget < 0) {
            throw std::runtime_error("basis rewrite did not terminate");
        }
        Instruction instr = work.front();
        work.pop_front();
        if (instr.kind != InstrKind::Gate || basis.count(instr.name) > 0) {
            out.instructions.push_back(instr);
            continue;
        }
        if (instr.qubits.size() > 2) {
            auto expansion = expand_three_qubit(instr);
            work.insert(work.begin(), expansion.begin(), expansion.end());
            continue;
        }
        auto named = named_rule(instr, basis);
        if (!named.empty()) {
            work.insert(work.begin(), named.begin(), named.end());
            continue;
        }
        bool bound = true;
        for (const auto& p : instr.params) {
            bound = bound && p.is_literal();
        }
        if (!bound) {
            auto sym = symbolic_rule(instr);
            if (sym.empty()) {
                throw std::runtime_error("cannot rewrite symbolic gate " +
                                         instr.name + " into the basis");
            }
            work.insert(work.begin(), sym.begin(), sym.end());
            continue;
        }
        const MatrixX u = gate_matrix(instr.name, literal_params(instr));
        std::vector<Instruction> synth =
            instr.qubits.size() == 1
                ? synthesize_one_qubit(u, instr.qubits[0])
                : synthesize_two_qubit(u, instr.qubits[0], instr.qubits[1]);
        work.insert(work.begin(), synth.begin(), synth.end());
    }
    return to_dag(out);
}

}  // namespace qsc
