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

#include <vector>

#include "qsc/circuit.hpp"
#include "qsc/gates.hpp"

namespace qsc {

/// u = exp(i phase) Rz(phi) Ry(theta) Rz(lambda).
struct ZyzAngles {
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;
    double phase = 0.0;
};

ZyzAngles zyz_decompose(const Matrix2& u);

/// u = exp(i phase) (k1l ⊗ k1r) exp(i(a XX + b YY + c ZZ)) (k2l ⊗ k2r)
/// with the Weyl-chamber normalization pi/4 >= a >= b >= |c|. In each
/// kron product the right factor acts on operand 0 (LSB).
struct WeylDecomposition {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double phase = 0.0;
    Matrix2 k1l, k1r, k2l, k2r;

    /// CNOTs needed to realize the interaction exactly (0-3).
    [[nodiscard]] int num_basis_gates(double tol = 1e-9) const;
};

WeylDecomposition weyl_decompose(const Matrix4& u);

/// rz/ry/rz on qubit q implementing u up to global phase; angles below
/// 1e-10 dropped, so at most 3 gates.
std::vector<Instruction> synthesize_one_qubit(const Matrix2& u, int q);

/// cx + 1q rotations on (q0, q1) implementing u up to global phase,
/// with the minimal CNOT count (<= 3). Operand 0 of u is q0.
std::vector<Instruction> synthesize_two_qubit(const Matrix4& u, int q0, int q1);

}  // namespace qsc
