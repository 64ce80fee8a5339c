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

#include <cstdint>

#include "qsc/circuit.hpp"

namespace qsc {

/// Seeded random circuit over {cz, cx, rxx, rx, ry, rz, s, t} with
/// uniform angles in (-pi, pi] and uniformly drawn distinct operands.
Circuit random_circuit(int num_qubits, int num_gates, std::uint64_t seed);

}  // namespace qsc
