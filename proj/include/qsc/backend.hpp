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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsc/graph.hpp"
#include "qsc/layout.hpp"

namespace qsc {

inline constexpr double kDefaultSingleQubitFidelity = 0.996;

struct CouplingEdge {
    int q1 = 0;
    int q2 = 0;
    double fidelity = 1.0;
    bool operator==(const CouplingEdge&) const = default;
};

struct Backend {
    std::string name;
    std::string backend_type = "superconducting";
    int qubits_num = 0;
    std::vector<CouplingEdge> coupling_list;
    std::vector<std::string> basis_gates;
    std::map<int, double> single_qubit_fidelity;
    std::optional<int> max_gate_count;
    std::string status = "online";
    std::vector<int> priority_qubits;

    /// Nodes 0..qubits_num-1; edge weight = two-qubit gate fidelity.
    [[nodiscard]] WeightedGraph coupling_graph() const;
    [[nodiscard]] bool has_edge(int a, int b) const;
    [[nodiscard]] double single_fidelity(int q) const;
    [[nodiscard]] double average_single_fidelity() const;
    /// Throws on out-of-range endpoints or fidelities outside [0,1].
    /// Returns false (a warning, not an error) when the coupling graph
    /// is disconnected.
    bool validate() const;
};

/// Per-compilation state threaded between passes: the target backend,
/// lazily built matrices, layouts, and free-form scratch data.
struct Model {
    Backend backend;
    std::optional<Layout> initial_layout;
    std::optional<Layout> final_layout;
    std::map<std::string, std::string> scratch;

    const Eigen::MatrixXi& distance_matrix();
    const Eigen::MatrixXd& fidelity_matrix();
    /// Next hop on a best-fidelity path (companion to fidelity_matrix).
    const Eigen::MatrixXi& next_hop();

private:
    void ensure_matrices();
    std::optional<Eigen::MatrixXi> distance_;
    std::optional<Eigen::MatrixXd> fidelity_;
    std::optional<Eigen::MatrixXi> next_hop_;
};

}  // namespace qsc
