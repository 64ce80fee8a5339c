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

#include "qsc/selector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qsc {

namespace {

/// Candidate VQPUs of exactly the requested size, in stored
/// (fidelity-descending) order per chip.
std::vector<std::pair<std::string, const VQPU*>> candidates(
    const ResourceDB& db, const SelectionRequest& req) {
    std::vector<std::pair<std::string, const VQPU*>> out;
    for (const auto& [name, record] : db.chips) {
        if (record.qpu.status != "online") {
            continue;
        }
        if (req.chip.has_value() && *req.chip != name) {
            continue;
        }
        auto it = record.vqpus.find(req.qubits);
        if (it == record.vqpus.end()) {
            continue;
        }
        for (const auto& v : it->second) {
            out.emplace_back(name, &v);
        }
    }
    if (out.empty()) {
        throw std::runtime_error("no VQPU with " + std::to_string(req.qubits) +
                                 " qubits is available");
    }
    return out;
}

bool vf2_extend(const WeightedGraph& g1, const WeightedGraph& g2,
                const std::vector<int>& order, size_t depth,
                std::map<int, int>& mapping, std::map<int, int>& reverse) {
    if (depth == order.size()) {
        return true;
    }
    const int u = order[depth];
    for (int v : g2.nodes()) {
        if (reverse.count(v) > 0 || g2.degree(v) != g1.degree(u)) {
            continue;
        }
        bool consistent = true;
        for (const auto& [mu, mv] : mapping) {
            if (g1.has_edge(u, mu) != g2.has_edge(v, mv)) {
                consistent = false;
                break;
            }
        }
        if (!consistent) {
            continue;
        }
        mapping[u] = v;
        reverse[v] = u;
        if (vf2_extend(g1, g2, order, depth + 1, mapping, reverse)) {
            return true;
        }
        mapping.erase(u);
        reverse.erase(v);
    }
    return false;
}

WeightedGraph normalized(const WeightedGraph& g) {
    double max_w = 0.0;
    for (const auto& [u, v, w] : g.edges()) {
        max_w = std::max(max_w, w);
    }
    if (max_w <= 0.0) {
        return g;
    }
    WeightedGraph out;
    for (int n : g.nodes()) {
        out.add_node(n);
    }
    for (const auto& [u, v, w] : g.edges()) {
        out.add_edge(u, v, w / max_w);
    }
    return out;
}

}  // namespace

SelectionResult select_fidelity_first(const ResourceDB& db,
                                      const SelectionRequest& req) {
    SelectionResult best;
    const VQPU* best_v = nullptr;
    for (const auto& [chip, v] : candidates(db, req)) {
        if (best_v == nullptr ||
            v->product_fidelity > best_v->product_fidelity ||
            (v->product_fidelity == best_v->product_fidelity &&
             v->average_fidelity > best_v->average_fidelity)) {
            best_v = v;
            best.chip = chip;
        }
    }
    best.vqpu = *best_v;
    return best;
}

std::optional<std::map<int, int>> graph_isomorphic(const WeightedGraph& g1,
                                                   const WeightedGraph& g2) {
    if (g1.num_nodes() != g2.num_nodes() || g1.num_edges() != g2.num_edges()) {
        return std::nullopt;
    }
    // Most-constrained-first: descending degree, ascending id.
    std::vector<int> order = g1.nodes();
    std::stable_sort(order.begin(), order.end(), [&g1](int a, int b) {
        if (g1.degree(a) != g1.degree(b)) {
            return g1.degree(a) > g1.degree(b);
        }
        return a < b;
    });
    std::map<int, int> mapping;
    std::map<int, int> reverse;
    if (vf2_extend(g1, g2, order, 0, mapping, reverse)) {
        return mapping;
    }
    return std::nullopt;
}

double wl_kernel(const WeightedGraph& g1, const WeightedGraph& g2,
                 const KernelConfig& cfg) {
    if (g1.num_nodes() == 0 || g2.num_nodes() == 0) {
        throw std::runtime_error("wl_kernel requires nonempty graphs");
    }
    // Shared injective relabeling table across both graphs.
    std::map<std::vector<int>, int> table;
    auto intern = [&table](const std::vector<int>& key) {
        auto it = table.find(key);
        if (it != table.end()) {
            return it->second;
        }
        const int label = static_cast<int>(table.size());
        table.emplace(key, label);
        return label;
    };
    // Keys carry the refinement round so labels from different rounds
    // never collide.
    std::map<int, int> labels1;
    std::map<int, int> labels2;
    for (int n : g1.nodes()) {
        labels1[n] = intern({0, g1.degree(n)});
    }
    for (int n : g2.nodes()) {
        labels2[n] = intern({0, g2.degree(n)});
    }

    const auto edges1 = g1.edges();
    const auto edges2 = g2.edges();
    double total = 0.0;
    for (int t = 1; t <= cfg.iterations; t++) {
        double k_t = 0.0;
        for (const auto& [u, v, w1] : edges1) {
            for (const auto& [x, y, w2] : edges2) {
                const double f =
                    cfg.weighted ? std::exp(-(w1 - w2) * (w1 - w2)) : 1.0;
                if (labels1.at(u) == labels2.at(x) &&
                    labels1.at(v) == labels2.at(y)) {
                    k_t += f;
                }
                if (labels1.at(u) == labels2.at(y) &&
                    labels1.at(v) == labels2.at(x)) {
                    k_t += f;
                }
            }
        }
        total += k_t;
        // Refine: new label = (own label, sorted neighbor labels).
        auto refine = [&intern, t](const WeightedGraph& g,
                                   const std::map<int, int>& labels) {
            std::map<int, int> next;
            for (int n : g.nodes()) {
                std::vector<int> key = {t, labels.at(n)};
                std::vector<int> nbr;
                for (int m : g.neighbors(n)) {
                    nbr.push_back(labels.at(m));
                }
                std::ranges::sort(nbr);
                key.insert(key.end(), nbr.begin(), nbr.end());
                next[n] = intern(key);
            }
            return next;
        };
        labels1 = refine(g1, labels1);
        labels2 = refine(g2, labels2);
    }
    return total;
}

SelectionResult select_structure_first(const ResourceDB& db,
                                       const SelectionRequest& req) {
    const auto pool = candidates(db, req);
    const WeightedGraph circuit = normalized(req.circuit_graph);
    for (const auto& [chip, v] : pool) {
        auto witness = graph_isomorphic(req.circuit_graph, v->graph);
        if (witness.has_value()) {
            return {chip, *v, witness};
        }
    }
    SelectionResult best;
    const VQPU* best_v = nullptr;
    double best_score = -1.0;
    for (const auto& [chip, v] : pool) {
        const double score = wl_kernel(circuit, normalized(v->graph));
        if (best_v == nullptr || score > best_score ||
            (score == best_score &&
             v->product_fidelity > best_v->product_fidelity)) {
            best_v = v;
            best_score = score;
            best.chip = chip;
        }
    }
    best.vqpu = *best_v;
    return best;
}

}  // namespace qsc
