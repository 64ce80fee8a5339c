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

#include <Eigen/Dense>
#include <complex>

#include "qsc/circuit.hpp"
#include "qsc/layout.hpp"

namespace qsc {

using StateVector = Eigen::VectorXcd;

inline constexpr int kMaxSimQubits = 12;

/// Exact amplitudes of the circuit applied to |0...0>. Qubit 0 is the
/// least significant bit of the amplitude index. Barriers and measures
/// are ignored. Throws above `max_qubits` or on unbound parameters.
StateVector simulate_statevector(const Circuit& circuit,
                                 int max_qubits = kMaxSimQubits);

/// True iff |<psi1|psi2>| >= 1 - tol (global-phase-insensitive).
bool states_equivalent(const StateVector& a, const StateVector& b, double tol);

/// Checks that `compiled` implements `orig` once physical wires are
/// relabeled: logical qubit q of `orig` enters at initial.physical(q)
/// and exits at final.physical(q); untouched physical wires must stay
/// in |0>.
bool equivalent_up_to_layout(const Circuit& orig, const Circuit& compiled,
                             const Layout& initial, const Layout& final_layout,
                             double tol);

}  // namespace qsc
