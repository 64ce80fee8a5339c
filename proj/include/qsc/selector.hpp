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
#include <optional>
#include <string>

#include "qsc/graph.hpp"
#include "qsc/resourcedb.hpp"

namespace qsc {

struct SelectionRequest {
    int qubits = 1;
    /// Circuit interaction graph; required for structure-first.
    WeightedGraph circuit_graph;
    /// Restrict selection to one chip when set.
    std::optional<std::string> chip;
};

struct SelectionResult {
    std::string chip;
    VQPU vqpu;
    /// Witness circuit-node -> virtual-id map when an exact structure
    /// match was found.
    std::optional<std::map<int, int>> mapping;
};

/// Highest product of two-qubit fidelities among VQPUs of exactly the
/// requested size on online chips. Throws when no chip has capacity.
SelectionResult select_fidelity_first(const ResourceDB& db,
                                      const SelectionRequest& req);

/// Exact isomorphism witness (weights ignored) or nullopt. VF2-style
/// backtracking with deterministic node ordering.
std::optional<std::map<int, int>> graph_isomorphic(const WeightedGraph& g1,
                                                   const WeightedGraph& g2);

struct KernelConfig {
    int iterations = 3;
    bool weighted = true;
};

/// Weisfeiler-Lehman subtree kernel: initial labels = degree, shared
/// injective relabeling, per-iteration sum over edge pairs of
/// endpoint-label agreement (both orientations) weighted by
/// f = exp(-(w1 - w2)^2) when weighted.
double wl_kernel(const WeightedGraph& g1, const WeightedGraph& g2,
                 const KernelConfig& cfg = {});

/// Scan same-size VQPUs (best average fidelity first) for a graph
/// isomorphic to the circuit; fall back to the highest WL-kernel score
/// over max-normalized edge weights, ties broken by product fidelity.
SelectionResult select_structure_first(const ResourceDB& db,
                                       const SelectionRequest& req);

}  // namespace qsc
