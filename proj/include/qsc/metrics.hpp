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

#include "qsc/backend.hpp"
#include "qsc/circuit.hpp"

namespace qsc {

struct VerificationResult {
    bool ok = true;
    /// (check id, message); ids: qubit_count, coupling, gate_count,
    /// non_empty.
    std::vector<std::pair<std::string, std::string>> violations;
};

/// Evaluate all four hardware-constraint checks (never short-circuits):
/// qubit count, two-qubit coupling, gate-count limit (when the backend
/// has one), and non-emptiness.
VerificationResult verify_program(const Circuit& circuit, const Backend& backend);

/// Probability distribution over bitstrings.
using Distribution = std::map<std::string, double>;

/// F_H = (1 - d_H^2)^2 with d_H^2 = 1 - sum(sqrt(p * q)); missing keys
/// count as probability 0.
double hellinger_fidelity(const Distribution& p_exp, const Distribution& p_ideal);

/// C = -D ln K - sum ln F_1q - sum ln F_2q over the circuit's gates.
/// The single-qubit fidelity is the backend average; two-qubit gates
/// use their edge fidelity. Natural logarithm; D = ASAP gate depth.
double circuit_cost(const Circuit& circuit, const Backend& backend, double k);

}  // namespace qsc
