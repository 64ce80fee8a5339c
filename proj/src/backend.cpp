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

#include "qsc/backend.hpp"

#include <stdexcept>

#include "qsc/mapping.hpp"

namespace qsc {

WeightedGraph Backend::coupling_graph() const {
    WeightedGraph g;
    for (int q = 0; q < qubits_num; q++) {
        g.add_node(q);
    }
    for (const auto& e : coupling_list) {
        g.add_edge(e.q1, e.q2, e.fidelity);
    }
    return g;
}

bool Backend::has_edge(int a, int b) const {
    for (const auto& e : coupling_list) {
        if ((e.q1 == a && e.q2 == b) || (e.q1 == b && e.q2 == a)) {
            return true;
        }
    }
    return false;
}

double Backend::single_fidelity(int q) const {
    auto it = single_qubit_fidelity.find(q);
    return it == single_qubit_fidelity.end() ? kDefaultSingleQubitFidelity
                                             : it->second;
}

double Backend::average_single_fidelity() const {
    if (qubits_num == 0) {
        return kDefaultSingleQubitFidelity;
    }
    double sum = 0.0;
    for (int q = 0; q < qubits_num; q++) {
        sum += single_fidelity(q);
    }
    return sum / qubits_num;
}

bool Backend::validate() const {
    for (const auto& e : coupling_list) {
        if (e.q1 < 0 || e.q1 >= qubits_num || e.q2 < 0 || e.q2 >= qubits_num ||
            e.q1 == e.q2) {
            throw std::runtime_error("coupling endpoints out of range: (" +
                                     std::to_string(e.q1) + ", " +
                                     std::to_string(e.q2) + ")");
        }
        if (e.fidelity < 0.0 || e.fidelity > 1.0) {
            throw std::runtime_error("coupling fidelity outside [0,1]");
        }
    }
    for (const auto& [q, f] : single_qubit_fidelity) {
        if (q < 0 || q >= qubits_num || f < 0.0 || f > 1.0) {
            throw std::runtime_error("bad single-qubit fidelity entry");
        }
    }
    return coupling_graph().connected();
}

void Model::ensure_matrices() {
    if (distance_.has_value()) {
        return;
    }
    const WeightedGraph g = backend.coupling_graph();
    distance_ = qsc::distance_matrix(g, backend.qubits_num);
    FidelityData fd = qsc::fidelity_matrix(g, backend.qubits_num);
    fidelity_ = std::move(fd.fi);
    next_hop_ = std::move(fd.next);
}

const Eigen::MatrixXi& Model::distance_matrix() {
    ensure_matrices();
    return *distance_;
}

const Eigen::MatrixXd& Model::fidelity_matrix() {
    ensure_matrices();
    return *fidelity_;
}

const Eigen::MatrixXi& Model::next_hop() {
    ensure_matrices();
    return *next_hop_;
}

}  // namespace qsc
