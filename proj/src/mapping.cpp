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

#include "qsc/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace qsc {

namespace {

constexpr long long kUnroutable = std::numeric_limits<long long>::max() / 4;

struct NodeKey {
    int degree;
    double weight_sum;
    int id;
};

std::vector<int> sorted_nodes(const WeightedGraph& g, bool by_weight) {
    std::vector<NodeKey> keys;
    for (int n : g.nodes()) {
        double wsum = 0.0;
        for (int v : g.neighbors(n)) {
            wsum += g.edge_weight(n, v);
        }
        keys.push_back({g.degree(n), wsum, n});
    }
    std::stable_sort(keys.begin(), keys.end(),
                     [by_weight](const NodeKey& a, const NodeKey& b) {
                         if (a.degree != b.degree) {
                             return a.degree > b.degree;
                         }
                         if (by_weight && a.weight_sum != b.weight_sum) {
                             return a.weight_sum > b.weight_sum;
                         }
                         return a.id > b.id;
                     });
    std::vector<int> out;
    out.reserve(keys.size());
    for (const auto& k : keys) {
        out.push_back(k.id);
    }
    return out;
}

struct RoutingState {
    const CircuitDAG* dag = nullptr;
    Layout pi;
    std::vector<int> indegree;
    std::set<int> ready;
    std::vector<double> decay;
    int swaps_since_reset = 0;
};

bool two_qubit_gate(const Instruction& in) {
    return in.kind == InstrKind::Gate && in.qubits.size() == 2;
}

/// Lookahead window: the next 2q gates past the front layer, in
/// dependency order.
std::vector<int> extended_set(const RoutingState& st, int limit) {
    std::vector<int> out;
    std::set<int> visited(st.ready.begin(), st.ready.end());
    std::deque<int> queue;
    for (int node : st.ready) {
        for (int s : st.dag->successors[node]) {
            if (visited.insert(s).second) {
                queue.push_back(s);
            }
        }
    }
    while (!queue.empty() && static_cast<int>(out.size()) < limit) {
        int node = queue.front();
        queue.pop_front();
        if (two_qubit_gate(st.dag->nodes[node])) {
            out.push_back(node);
        }
        for (int s : st.dag->successors[node]) {
            if (visited.insert(s).second) {
                queue.push_back(s);
            }
        }
    }
    return out;
}

int phys_of(const RoutingState& st, int logical, std::pair<int, int> swapped) {
    int p = st.pi.physical(logical);
    if (p == swapped.first) {
        return swapped.second;
    }
    if (p == swapped.second) {
        return swapped.first;
    }
    return p;
}

long long distance_sum(const RoutingState& st, const Eigen::MatrixXi& d,
                       const std::vector<int>& gates,
                       std::pair<int, int> swapped) {
    long long sum = 0;
    for (int node : gates) {
        const auto& g = st.dag->nodes[node];
        const int a = phys_of(st, g.qubits[0], swapped);
        const int b = phys_of(st, g.qubits[1], swapped);
        if (d(a, b) < 0) {
            return kUnroutable;
        }
        sum += d(a, b);
    }
    return sum;
}

double fidelity_mean(const RoutingState& st, const Eigen::MatrixXd& fi,
                     const std::vector<int>& gates,
                     std::pair<int, int> swapped) {
    if (gates.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (int node : gates) {
        const auto& g = st.dag->nodes[node];
        sum += fi(phys_of(st, g.qubits[0], swapped),
                  phys_of(st, g.qubits[1], swapped));
    }
    return sum / static_cast<double>(gates.size());
}

double max_decay(const RoutingState& st, std::pair<int, int> swap) {
    return std::max(st.decay[swap.first], st.decay[swap.second]);
}

}  // namespace

Eigen::MatrixXi distance_matrix(const WeightedGraph& g, int n) {
    Eigen::MatrixXi d = Eigen::MatrixXi::Constant(n, n, -1);
    for (int src = 0; src < n; src++) {
        d(src, src) = 0;
        if (!g.has_node(src)) {
            continue;
        }
        std::deque<int> queue = {src};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (v != src && d(src, v) < 0) {
                    d(src, v) = d(src, u) + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return d;
}

FidelityData fidelity_matrix(const WeightedGraph& g, int n) {
    FidelityData out;
    out.fi = Eigen::MatrixXd::Zero(n, n);
    out.next = Eigen::MatrixXi::Constant(n, n, -1);
    const double inf = std::numeric_limits<double>::infinity();
    for (int src = 0; src < n; src++) {
        out.fi(src, src) = 1.0;
        std::vector<double> cost(n, inf);
        std::vector<int> parent(n, -1);
        cost[src] = 0.0;
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        heap.push({0.0, src});
        while (!heap.empty()) {
            auto [c, u] = heap.top();
            heap.pop();
            if (c > cost[u]) {
                continue;
            }
            for (int v : g.neighbors(u)) {
                const double f = g.edge_weight(u, v);
                if (f <= 0.0) {
                    continue;
                }
                const double nc = c - std::log(f);
                if (nc < cost[v]) {
                    cost[v] = nc;
                    parent[v] = u;
                    heap.push({nc, v});
                }
            }
        }
        for (int dst = 0; dst < n; dst++) {
            if (dst == src || cost[dst] == inf) {
                continue;
            }
            out.fi(src, dst) = std::exp(-cost[dst]);
            int hop = dst;
            while (parent[hop] != src) {
                hop = parent[hop];
            }
            out.next(src, dst) = hop;
        }
    }
    return out;
}

Layout initial_layout(const WeightedGraph& gqc, const WeightedGraph& gvqpu,
                      InitStrategy strategy, std::uint64_t seed) {
    if (gqc.num_nodes() > gvqpu.num_nodes()) {
        throw std::runtime_error("circuit has more qubits than the device");
    }
    Layout layout;
    if (strategy == InitStrategy::Random) {
        std::vector<int> device = gvqpu.nodes();
        std::mt19937_64 rng(seed);
        std::shuffle(device.begin(), device.end(), rng);
        std::vector<int> circuit = gqc.nodes();
        for (size_t i = 0; i < circuit.size(); i++) {
            layout.assign(circuit[i], device[i]);
        }
        return layout;
    }
    const bool by_weight = strategy == InitStrategy::Weight;
    const std::vector<int> circuit = sorted_nodes(gqc, by_weight);
    const std::vector<int> device = sorted_nodes(gvqpu, by_weight);
    for (size_t i = 0; i < circuit.size(); i++) {
        layout.assign(circuit[i], device[i]);
    }
    return layout;
}

RoutingResult sabre_route(const CircuitDAG& dag, Model& m, Heuristic heuristic,
                          const Layout& layout, std::uint64_t seed,
                          const RoutingConfig& cfg) {
    (void)seed;  // selection is fully deterministic; seed kept for API parity
    const int nphys = m.backend.qubits_num;
    const Eigen::MatrixXi& dist = m.distance_matrix();
    const Eigen::MatrixXd& fi = m.fidelity_matrix();
    const WeightedGraph cg = m.backend.coupling_graph();

    int num_logical = 0;
    for (const auto& r : dag.qregs) {
        num_logical += r.size;
    }
    if (num_logical > nphys) {
        throw std::runtime_error("circuit has more qubits than the device");
    }
    for (const auto& in : dag.nodes) {
        if (in.kind == InstrKind::Gate && in.qubits.size() > 2) {
            throw std::runtime_error("routing requires <=2-qubit gates");
        }
    }

    RoutingState st;
    st.dag = &dag;
    st.pi = layout;
    for (int q = 0; q < num_logical; q++) {
        if (!st.pi.has_logical(q)) {
            for (int p = 0; p < nphys; p++) {
                if (!st.pi.has_physical(p)) {
                    st.pi.assign(q, p);
                    break;
                }
            }
        }
    }
    st.indegree.resize(dag.num_nodes());
    for (int i = 0; i < dag.num_nodes(); i++) {
        st.indegree[i] = static_cast<int>(dag.predecessors[i].size());
        if (st.indegree[i] == 0) {
            st.ready.insert(i);
        }
    }
    st.decay.assign(nphys, 1.0);

    RoutingResult result;
    result.circuit.qregs.push_back({"q", nphys});
    result.circuit.cregs = dag.cregs;

    auto execute = [&](int node) {
        Instruction mapped = dag.nodes[node];
        for (int& q : mapped.qubits) {
            q = st.pi.physical(q);
        }
        result.circuit.instructions.push_back(mapped);
        st.ready.erase(node);
        for (int s : dag.successors[node]) {
            if (--st.indegree[s] == 0) {
                st.ready.insert(s);
            }
        }
    };

    const long long swap_budget = 10000LL + 100LL * nphys;
    while (!st.ready.empty()) {
        bool progressed = true;
        while (progressed) {
            progressed = false;
            for (int node : std::vector<int>(st.ready.begin(), st.ready.end())) {
                const auto& in = dag.nodes[node];
                if (!two_qubit_gate(in) ||
                    cg.has_edge(st.pi.physical(in.qubits[0]),
                                st.pi.physical(in.qubits[1]))) {
                    execute(node);
                    progressed = true;
                }
            }
        }
        if (st.ready.empty()) {
            break;
        }

        std::vector<int> front2q;
        for (int node : st.ready) {
            if (two_qubit_gate(dag.nodes[node])) {
                front2q.push_back(node);
            }
        }
        const std::vector<int> ext = extended_set(st, cfg.extended_set_size);

        // Swap candidates: coupling edges touching any front-layer
        // physical qubit.
        std::set<int> active;
        for (int node : front2q) {
            for (int q : dag.nodes[node].qubits) {
                active.insert(st.pi.physical(q));
            }
        }
        std::vector<std::pair<int, int>> candidates;
        for (const auto& [u, v, w] : cg.edges()) {
            if (active.count(u) > 0 || active.count(v) > 0) {
                candidates.emplace_back(u, v);
            }
        }
        if (candidates.empty()) {
            throw std::runtime_error("routing stuck: no swap candidates");
        }

        // S_D: exact integer minimization of the distance score
        // sum_F D + 0.5 * mean-normalized lookahead, scaled to integers.
        std::vector<long long> scores(candidates.size());
        long long best_score = kUnroutable;
        for (size_t i = 0; i < candidates.size(); i++) {
            const long long sf = distance_sum(st, dist, front2q, candidates[i]);
            const long long se = distance_sum(st, dist, ext, candidates[i]);
            if (sf >= kUnroutable || se >= kUnroutable) {
                scores[i] = kUnroutable;
            } else if (ext.empty()) {
                scores[i] = sf;
            } else {
                scores[i] = 2 * static_cast<long long>(ext.size()) * sf +
                            static_cast<long long>(front2q.size()) * se;
            }
            best_score = std::min(best_score, scores[i]);
        }
        if (best_score >= kUnroutable) {
            throw std::runtime_error(
                "routing impossible: disconnected device region");
        }
        std::vector<std::pair<int, int>> s_d;
        for (size_t i = 0; i < candidates.size(); i++) {
            if (scores[i] == best_score) {
                s_d.push_back(candidates[i]);
            }
        }

        auto h_fi = [&](std::pair<int, int> s) {
            return max_decay(st, s) *
                   (fidelity_mean(st, fi, front2q, s) +
                    cfg.w * fidelity_mean(st, fi, ext, s));
        };
        auto argmax = [&](const std::vector<std::pair<int, int>>& pool,
                          auto&& score) {
            std::pair<int, int> best = pool.front();
            double best_val = score(best);
            for (const auto& s : pool) {
                const double v = score(s);
                if (v > best_val + 1e-15) {
                    best = s;
                    best_val = v;
                }
            }
            return best;
        };

        std::pair<int, int> chosen;
        switch (heuristic) {
            case Heuristic::HD:
                chosen = argmax(s_d, [&](std::pair<int, int> s) {
                    return max_decay(st, s);
                });
                break;
            case Heuristic::HFi:
                chosen = argmax(candidates, h_fi);
                break;
            case Heuristic::HM:
                chosen = s_d.size() == 1 ? s_d.front() : argmax(s_d, h_fi);
                break;
        }
        result.steps.push_back({chosen, s_d});
        result.circuit.instructions.push_back(
            Instruction::gate("swap", {chosen.first, chosen.second}));
        st.pi.swap_physical(chosen.first, chosen.second);
        st.decay[chosen.first] += cfg.decay_delta;
        st.decay[chosen.second] += cfg.decay_delta;
        result.swap_count++;
        if (++st.swaps_since_reset >= cfg.decay_reset_interval) {
            st.decay.assign(nphys, 1.0);
            st.swaps_since_reset = 0;
        }
        if (result.swap_count > swap_budget) {
            throw std::runtime_error("routing exceeded swap budget");
        }
    }

    for (int q = 0; q < num_logical; q++) {
        result.final_layout.assign(q, st.pi.physical(q));
    }
    return result;
}

Layout sabre_layout(const CircuitDAG& dag, Model& m, Heuristic heuristic,
                    InitStrategy strategy, int iterations, std::uint64_t seed,
                    const RoutingConfig& cfg) {
    Circuit c = from_dag(dag);
    const WeightedGraph gqc = circuit_weighted_graph(c);
    const WeightedGraph gdev = m.backend.coupling_graph();
    Layout cur = initial_layout(gqc, gdev, strategy, seed);
    for (int q = 0; q < c.num_qubits(); q++) {
        if (!cur.has_logical(q)) {
            for (int p = 0; p < m.backend.qubits_num; p++) {
                if (!cur.has_physical(p)) {
                    cur.assign(q, p);
                    break;
                }
            }
        }
    }
    if (iterations <= 0) {
        return cur;
    }

    Circuit fwd;
    fwd.qregs = c.qregs;
    Circuit rev;
    rev.qregs = c.qregs;
    for (const auto& in : c.instructions) {
        if (in.kind == InstrKind::Gate) {
            fwd.instructions.push_back(in);
        }
    }
    rev.instructions.assign(fwd.instructions.rbegin(), fwd.instructions.rend());
    const CircuitDAG fwd_dag = to_dag(fwd);
    const CircuitDAG rev_dag = to_dag(rev);

    const Eigen::MatrixXd& fi = m.fidelity_matrix();
    auto mean_edge_fi = [&](const Layout& l) {
        double sum = 0.0;
        int count = 0;
        for (const auto& [u, v, w] : gqc.edges()) {
            sum += fi(l.physical(u), l.physical(v));
            count++;
        }
        return count == 0 ? 1.0 : sum / count;
    };

    Layout best = cur;
    int best_swaps = std::numeric_limits<int>::max();
    double best_fi = -1.0;
    for (int it = 0; it < iterations; it++) {
        RoutingResult forward = sabre_route(fwd_dag, m, heuristic, cur, seed, cfg);
        const double mf = mean_edge_fi(cur);
        if (forward.swap_count < best_swaps ||
            (forward.swap_count == best_swaps && mf > best_fi)) {
            best = cur;
            best_swaps = forward.swap_count;
            best_fi = mf;
        }
        RoutingResult backward =
            sabre_route(rev_dag, m, heuristic, forward.final_layout, seed, cfg);
        cur = backward.final_layout;
    }
    return best;
}

}  // namespace qsc
