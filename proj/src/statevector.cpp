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

#include "qsc/statevector.hpp"

#include <stdexcept>

#include "qsc/gates.hpp"

namespace qsc {

namespace {

/// Apply a 2^k x 2^k unitary to the given qubits (operand 0 = LSB of
/// the local index) in place.
void apply_gate(StateVector& psi, const MatrixX& u, const std::vector<int>& qubits) {
    const int k = static_cast<int>(qubits.size());
    const int dim = 1 << k;
    const auto n = psi.size();
    // Iterate over index groups that differ only in the target bits.
    std::vector<Eigen::Index> masks(k);
    for (int i = 0; i < k; i++) {
        masks[i] = Eigen::Index{1} << qubits[i];
    }
    Eigen::Index target_mask = 0;
    for (auto m : masks) {
        target_mask |= m;
    }
    Eigen::VectorXcd local(dim);
    for (Eigen::Index base = 0; base < n; base++) {
        if ((base & target_mask) != 0) {
            continue;
        }
        for (int row = 0; row < dim; row++) {
            Eigen::Index idx = base;
            for (int b = 0; b < k; b++) {
                if ((row >> b) & 1) {
                    idx |= masks[b];
                }
            }
            local[row] = psi[idx];
        }
        local = (u * local).eval();
        for (int row = 0; row < dim; row++) {
            Eigen::Index idx = base;
            for (int b = 0; b < k; b++) {
                if ((row >> b) & 1) {
                    idx |= masks[b];
                }
            }
            psi[idx] = local[row];
        }
    }
}

}  // namespace

StateVector simulate_statevector(const Circuit& circuit, int max_qubits) {
    const int n = circuit.num_qubits();
    if (n > max_qubits) {
        throw std::runtime_error("circuit has " + std::to_string(n) +
                                 " qubits; simulation cap is " +
                                 std::to_string(max_qubits));
    }
    StateVector psi = StateVector::Zero(Eigen::Index{1} << n);
    psi[0] = 1.0;
    for (const auto& in : circuit.instructions) {
        if (in.kind != InstrKind::Gate) {
            continue;
        }
        std::vector<double> params;
        params.reserve(in.params.size());
        for (const auto& p : in.params) {
            params.push_back(p.value());
        }
        apply_gate(psi, gate_matrix(in.name, params), in.qubits);
    }
    return psi;
}

bool states_equivalent(const StateVector& a, const StateVector& b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    return std::abs(a.dot(b)) >= 1.0 - tol;
}

bool equivalent_up_to_layout(const Circuit& orig, const Circuit& compiled,
                             const Layout& initial, const Layout& final_layout,
                             double tol) {
    const int n = orig.num_qubits();
    const int m = compiled.num_qubits();
    for (int q = 0; q < n; q++) {
        if (!initial.has_logical(q) || !final_layout.has_logical(q)) {
            return false;
        }
        if (initial.physical(q) >= m || final_layout.physical(q) >= m) {
            return false;
        }
    }
    StateVector orig_psi = simulate_statevector(orig);
    StateVector comp_psi = simulate_statevector(compiled);
    // Embed the original state at the final physical positions, idle
    // wires in |0>. Both circuits start from |0...0>, so the initial
    // layout only fixes which wire each logical qubit occupies.
    StateVector expected = StateVector::Zero(Eigen::Index{1} << m);
    for (Eigen::Index x = 0; x < orig_psi.size(); x++) {
        Eigen::Index idx = 0;
        for (int q = 0; q < n; q++) {
            if ((x >> q) & 1) {
                idx |= Eigen::Index{1} << final_layout.physical(q);
            }
        }
        expected[idx] = orig_psi[x];
    }
    return states_equivalent(expected, comp_psi, tol);
}

}  // namespace qsc
