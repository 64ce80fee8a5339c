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
#include <utility>
#include <vector>

#include "qsc/backend.hpp"
#include "qsc/dag.hpp"
#include "qsc/layout.hpp"

namespace qsc {

/// Routing heuristics: distance-only, noise-aware, and the mixed rule
/// (distance shortlist refined by fidelity).
enum class Heuristic { HD, HFi, HM };

enum class InitStrategy { Degree, Weight, Random };

/// Shortest-path hop counts over nodes 0..n-1. Unreachable pairs get -1.
Eigen::MatrixXi distance_matrix(const WeightedGraph& g, int n);

struct FidelityData {
    /// Best product of edge fidelities over any path (1 on diagonal).
    Eigen::MatrixXd fi;
    /// next(i, j) = neighbor of i on a best path toward j; -1 if none.
    Eigen::MatrixXi next;
};

/// Max-product paths via shortest paths under edge cost -log(fidelity).
FidelityData fidelity_matrix(const WeightedGraph& g, int n);

/// Structure-aware initial placement: pair the two node lists sorted by
/// descending degree (ties: descending incident-weight sum for the
/// weight strategy, then descending node id). Random = seeded draw of
/// device nodes.
Layout initial_layout(const WeightedGraph& gqc, const WeightedGraph& gvqpu,
                      InitStrategy strategy, std::uint64_t seed);

/// One routing decision, kept for heuristic audits.
struct RoutingStep {
    std::pair<int, int> chosen;
    std::vector<std::pair<int, int>> s_d;
};

struct RoutingResult {
    Circuit circuit;
    Layout final_layout;
    int swap_count = 0;
    std::vector<RoutingStep> steps;
};

struct RoutingConfig {
    double w = 0.5;
    int extended_set_size = 20;
    double decay_delta = 0.001;
    int decay_reset_interval = 5;
};

/// SABRE-style routing of a <=2-qubit-gate DAG onto m.backend starting
/// from a total layout. Inserted gates are named swaps on physical
/// pairs; the output circuit is over physical qubits.
RoutingResult sabre_route(const CircuitDAG& dag, Model& m, Heuristic heuristic,
                          const Layout& layout, std::uint64_t seed,
                          const RoutingConfig& cfg = {});

/// Reverse-traversal refinement: route forward/backward `iterations`
/// times from the structure-aware initial layout, keeping the starting
/// layout with the fewest inserted swaps (ties: higher mean fidelity
/// over mapped edges).
Layout sabre_layout(const CircuitDAG& dag, Model& m, Heuristic heuristic,
                    InitStrategy strategy, int iterations, std::uint64_t seed,
                    const RoutingConfig& cfg = {});

}  // namespace qsc
