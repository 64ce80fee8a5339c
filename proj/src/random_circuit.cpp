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

#include "qsc/random_circuit.hpp"

#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace qsc {

Circuit random_circuit(int num_qubits, int num_gates, std::uint64_t seed) {
    static const std::vector<std::string> pool = {"cz", "cx", "rxx", "rx",
                                                  "ry", "rz", "s",   "t"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_gate(0,
                                                 static_cast<int>(pool.size()) - 1);
    std::uniform_int_distribution<int> pick_qubit(0, num_qubits - 1);
    std::uniform_real_distribution<double> pick_angle(-std::numbers::pi,
                                                      std::numbers::pi);
    Circuit c = make_circuit(num_qubits);
    for (int i = 0; i < num_gates; i++) {
        const std::string& name = pool[pick_gate(rng)];
        const bool two_qubit = name == "cz" || name == "cx" || name == "rxx";
        const bool parameterized = name == "rxx" || name == "rx" ||
                                   name == "ry" || name == "rz";
        std::vector<int> qubits = {pick_qubit(rng)};
        if (two_qubit) {
            if (num_qubits < 2) {
                continue;
            }
            int other = pick_qubit(rng);
            while (other == qubits[0]) {
                other = pick_qubit(rng);
            }
            qubits.push_back(other);
        }
        std::vector<ParamExpr> params;
        if (parameterized) {
            params.emplace_back(pick_angle(rng));
        }
        c.instructions.push_back(Instruction::gate(name, qubits, params));
    }
    return c;
}

}  // namespace qsc
