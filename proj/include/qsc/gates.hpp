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
#include <optional>
#include <string>
#include <vector>

namespace qsc {

using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using MatrixX = Eigen::MatrixXcd;

struct GateInfo {
    std::string name;
    int num_qubits = 1;
    int num_params = 0;
    bool self_inverse = false;
    /// Gate whose application with the same operands undoes this one
    /// (e.g. s/sdg); empty when none or when self_inverse covers it.
    std::string inverse_name;
};

/// Look up a gate in the built-in vocabulary. Returns nullptr for
/// unknown names (barrier and measure are not gates).
const GateInfo* gate_info(const std::string& name);

/// All gate names in the built-in vocabulary.
const std::vector<std::string>& gate_vocabulary();

/// Unitary of a vocabulary gate with bound parameters. Matrix index
/// convention: operand 0 is the least significant bit of the row/column
/// index. Size is 2^arity.
MatrixX gate_matrix(const std::string& name, const std::vector<double>& params);

Matrix2 rx_matrix(double theta);
Matrix2 ry_matrix(double theta);
Matrix2 rz_matrix(double theta);

}  // namespace qsc
