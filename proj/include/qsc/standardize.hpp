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
#include <utility>

#include "qsc/circuit.hpp"

namespace qsc {

/// Ensure a measurement block: if the circuit has no measures, measure
/// every gate-touched qubit; otherwise keep the existing measured set.
/// The classical register is resized to exactly the measured count and
/// measures move after the last gate (and final barrier, if present).
Circuit complete_measurements(const Circuit& circuit);

/// Place exactly one barrier over the measured qubits immediately
/// before the measurement block. No-op without measures.
Circuit insert_barriers(const Circuit& circuit);

/// Merge all quantum registers into "q" and classical into "c",
/// preserving flat index order.
Circuit rename_registers(const Circuit& circuit);

/// Drop qubits with no gate and no measure; renumber the rest
/// contiguously. Returns the old->new index map.
std::pair<Circuit, std::map<int, int>> prune_idle_qubits(const Circuit& circuit);

/// prune_idle_qubits, rename_registers, complete_measurements,
/// insert_barriers, in that order. Idempotent.
Circuit standardize(const Circuit& circuit);

}  // namespace qsc
