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

// Brute-force reference implementations used only by tests. Each is
// deliberately simple and independent of the library's algorithms.

#pragma once

#include <algorithm>
#include <complex>
#include <deque>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "qsc/circuit.hpp"
#include "qsc/gates.hpp"
#include "qsc/graph.hpp"

namespace qsc::oracles {

/// Dense 2^n x 2^n unitary of a gate list by explicit index expansion
/// (qubit 0 = least significant bit; gate operand 0 = LSB of the gate
/// matrix index). Barriers and measures are skipped.
inline Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
    const int n = circuit.num_qubits();
    const long dim = 1L << n;
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& instr : circuit.instructions) {
        if (instr.kind != InstrKind::Gate) {
            continue;
        }
        std::vector<double> params;
        for (const auto& p : instr.params) {
            params.push_back(p.value());
        }
        const MatrixX m = gate_matrix(instr.name, params);
        const int k = static_cast<int>(instr.qubits.size());
        Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
        for (long col = 0; col < dim; col++) {
            long sub_col = 0;
            for (int b = 0; b < k; b++) {
                sub_col |= ((col >> instr.qubits[b]) & 1L) << b;
            }
            for (long sub_row = 0; sub_row < (1L << k); sub_row++) {
                long row = col;
                for (int b = 0; b < k; b++) {
                    const long bit = (sub_row >> b) & 1L;
                    row = (row & ~(1L << instr.qubits[b])) |
                          (bit << instr.qubits[b]);
                }
                full(row, col) += m(sub_row, sub_col);
            }
        }
        total = full * total;
    }
    return total;
}

/// max_U |(A - e^{i phi} B)| over the optimal global phase, Frobenius.
inline double phase_adjusted_distance(const Eigen::MatrixXcd& a,
                                      const Eigen::MatrixXcd& b) {
    const std::complex<double> tr = (b.adjoint() * a).trace();
    std::complex<double> phase = 1.0;
    if (std::abs(tr) > 1e-14) {
        phase = tr / std::abs(tr);
    }
    return (a - phase * b).norm();
}

/// Plain queue BFS hop counts; -1 when unreachable.
inline Eigen::MatrixXi bfs_distances(const WeightedGraph& g, int n) {
    Eigen::MatrixXi d = Eigen::MatrixXi::Constant(n, n, -1);
    for (int s = 0; s < n; s++) {
        d(s, s) = 0;
        std::deque<int> queue = {s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            if (!g.has_node(u)) {
                continue;
            }
            for (int v : g.neighbors(u)) {
                if (d(s, v) < 0) {
                    d(s, v) = d(s, u) + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return d;
}

inline void all_paths_visit(const WeightedGraph& g, int u, int target,
                            double product, std::vector<bool>& visited,
                            double& best) {
    if (u == target) {
        best = std::max(best, product);
        return;
    }
    for (int v : g.neighbors(u)) {
        if (!visited[v]) {
            visited[v] = true;
            all_paths_visit(g, v, target, product * g.edge_weight(u, v),
                            visited, best);
            visited[v] = false;
        }
    }
}

/// Best fidelity product over every simple path (exponential search).
inline double best_path_product(const WeightedGraph& g, int n, int a, int b) {
    if (a == b) {
        return 1.0;
    }
    std::vector<bool> visited(n, false);
    visited[a] = true;
    double best = 0.0;
    all_paths_visit(g, a, b, 1.0, visited, best);
    return best;
}

/// Try every node permutation (factorial; keep graphs <= 8 nodes).
inline bool isomorphic_by_permutation(const WeightedGraph& g1,
                                      const WeightedGraph& g2) {
    if (g1.num_nodes() != g2.num_nodes() || g1.num_edges() != g2.num_edges()) {
        return false;
    }
    const std::vector<int> n1 = g1.nodes();
    std::vector<int> n2 = g2.nodes();
    std::sort(n2.begin(), n2.end());
    do {
        bool match = true;
        for (size_t i = 0; i < n1.size() && match; i++) {
            for (size_t j = i + 1; j < n1.size() && match; j++) {
                if (g1.has_edge(n1[i], n1[j]) != g2.has_edge(n2[i], n2[j])) {
                    match = false;
                }
            }
        }
        if (match) {
            return true;
        }
    } while (std::next_permutation(n2.begin(), n2.end()));
    return false;
}

}  // namespace qsc::oracles
