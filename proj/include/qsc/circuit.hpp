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

#include <map>
#include <string>
#include <vector>

#include "qsc/param.hpp"

namespace qsc {

enum class InstrKind { Gate, Barrier, Measure };

struct Instruction {
    InstrKind kind = InstrKind::Gate;
    std::string name;           // gate name; "barrier"/"measure" otherwise
    std::vector<int> qubits;    // flat qubit indices
    std::vector<int> clbits;    // measure only
    std::vector<ParamExpr> params;

    static Instruction gate(std::string name, std::vector<int> qubits,
                            std::vector<ParamExpr> params = {});
    static Instruction barrier(std::vector<int> qubits);
    static Instruction measure(int qubit, int clbit);

    bool operator==(const Instruction& rhs) const;
};

struct Register {
    std::string name;
    int size = 0;
    bool operator==(const Register&) const = default;
};

/// An ordered list of instructions over flat qubit/clbit index spaces.
/// Register declarations partition those spaces for QASM round-trips.
struct Circuit {
    std::vector<Register> qregs;
    std::vector<Register> cregs;
    std::vector<Instruction> instructions;
    std::map<std::string, std::string> metadata;

    [[nodiscard]] int num_qubits() const;
    [[nodiscard]] int num_clbits() const;

    /// Gate counts keyed by operand arity (1, 2, 3); barriers and
    /// measures excluded.
    [[nodiscard]] std::map<int, int> gate_counts() const;
    /// Number of gate layers under as-soon-as-possible scheduling,
    /// barriers and measures excluded.
    [[nodiscard]] int depth() const;
    /// True when every gate parameter is a literal.
    [[nodiscard]] bool is_bound() const;
    /// Qubits touched by at least one gate or measure.
    [[nodiscard]] std::vector<bool> used_qubits() const;

    /// Structural equality of registers and instruction lists.
    bool operator==(const Circuit& rhs) const;

    /// Throws if an operand is out of range or a gate has wrong arity.
    void validate() const;
};

/// Convenience constructor: n qubits in register "q", m clbits in "c"
/// (registers omitted when size is zero).
Circuit make_circuit(int num_qubits, int num_clbits = 0);

}  // namespace qsc
