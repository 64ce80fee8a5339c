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

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace qsc {

/// Undirected weighted graph over integer node labels. Nodes may carry
/// arbitrary (non-contiguous) labels, e.g. physical qubit ids.
class WeightedGraph {
public:
    void add_node(int node) { adjacency_[node]; }

    void add_edge(int u, int v, double weight) {
        adjacency_[u][v] = weight;
        adjacency_[v][u] = weight;
    }

    void add_edge_weight(int u, int v, double delta) {
        adjacency_[u][v] += delta;
        adjacency_[v][u] = adjacency_[u][v];
    }

    [[nodiscard]] bool has_node(int node) const {
        return adjacency_.count(node) > 0;
    }

    [[nodiscard]] bool has_edge(int u, int v) const {
        auto it = adjacency_.find(u);
        return it != adjacency_.end() && it->second.count(v) > 0;
    }

    [[nodiscard]] double edge_weight(int u, int v) const {
        auto it = adjacency_.find(u);
        if (it == adjacency_.end()) {
            return 0.0;
        }
        auto jt = it->second.find(v);
        return jt == it->second.end() ? 0.0 : jt->second;
    }

    [[nodiscard]] int num_nodes() const {
        return static_cast<int>(adjacency_.size());
    }

    [[nodiscard]] int num_edges() const {
        int n = 0;
        for (const auto& [u, nbrs] : adjacency_) {
            for (const auto& [v, w] : nbrs) {
                n += static_cast<int>(u < v);
            }
        }
        return n;
    }

    [[nodiscard]] int degree(int node) const {
        auto it = adjacency_.find(node);
        return it == adjacency_.end() ? 0 : static_cast<int>(it->second.size());
    }

    [[nodiscard]] std::vector<int> nodes() const {
        std::vector<int> out;
        out.reserve(adjacency_.size());
        for (const auto& [n, nbrs] : adjacency_) {
            out.push_back(n);
        }
        return out;
    }

    [[nodiscard]] std::vector<int> neighbors(int node) const {
        std::vector<int> out;
        auto it = adjacency_.find(node);
        if (it != adjacency_.end()) {
            for (const auto& [v, w] : it->second) {
                out.push_back(v);
            }
        }
        return out;
    }

    /// Undirected edges as (u, v, weight) with u < v, sorted.
    [[nodiscard]] std::vector<std::tuple<int, int, double>> edges() const {
        std::vector<std::tuple<int, int, double>> out;
        for (const auto& [u, nbrs] : adjacency_) {
            for (const auto& [v, w] : nbrs) {
                if (u < v) {
                    out.emplace_back(u, v, w);
                }
            }
        }
        return out;
    }

    /// Subgraph induced by the given nodes (missing nodes ignored).
    [[nodiscard]] WeightedGraph induced(const std::vector<int>& keep) const {
        WeightedGraph g;
        for (int n : keep) {
            if (has_node(n)) {
                g.add_node(n);
            }
        }
        for (int n : keep) {
            auto it = adjacency_.find(n);
            if (it == adjacency_.end()) {
                continue;
            }
            for (const auto& [v, w] : it->second) {
                if (n < v && g.has_node(v)) {
                    g.add_edge(n, v, w);
                }
            }
        }
        return g;
    }

    [[nodiscard]] bool connected() const {
        if (adjacency_.empty()) {
            return true;
        }
        std::vector<int> stack = {adjacency_.begin()->first};
        std::map<int, bool> seen = {{stack[0], true}};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        return std::ranges::all_of(adjacency_,
                                   [&](const auto& kv) { return seen[kv.first]; });
    }

    bool operator==(const WeightedGraph& rhs) const {
        return adjacency_ == rhs.adjacency_;
    }

private:
    std::map<int, std::map<int, double>> adjacency_;
};

}  // namespace qsc
