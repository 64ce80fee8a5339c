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

#include "qsc/dag.hpp"

namespace qsc {

/// Remove wire-adjacent inverse pairs on identical qubit tuples until
/// no pair remains. Barriers are fences.
CircuitDAG cancel_inverses(const CircuitDAG& dag);

/// Merge adjacent same-name rotations (symbolic-friendly angle
/// addition) and replace literal single-qubit runs by at most three
/// rotations from the run's ZYZ product. Angles are canonicalized to
/// (-pi, pi]; rotations below 1e-10 are dropped.
CircuitDAG fuse_1q(const CircuitDAG& dag);

/// Bind symbols to values; unbound symbols stay symbolic.
CircuitDAG substitute_params(const CircuitDAG& dag,
                             const std::map<std::string, double>& bindings);

}  // namespace qsc
