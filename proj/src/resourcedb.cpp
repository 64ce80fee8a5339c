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

#include "qsc/resourcedb.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace qsc {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json graph_to_json(const WeightedGraph& g) {
    json j;
    j["nodes"] = g.nodes();
    j["edges"] = json::array();
    for (const auto& [u, v, w] : g.edges()) {
        j["edges"].push_back({u, v, w});
    }
    return j;
}

WeightedGraph graph_from_json(const json& j) {
    WeightedGraph g;
    for (int n : j.at("nodes")) {
        g.add_node(n);
    }
    for (const auto& e : j.at("edges")) {
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>());
    }
    return g;
}

int priority_count(const std::vector<int>& qubits,
                   const std::vector<int>& priority) {
    int n = 0;
    for (int q : qubits) {
        n += static_cast<int>(std::ranges::find(priority, q) != priority.end());
    }
    return n;
}

void sort_subqpus(std::vector<SubQPU>& subs, const QPU& qpu) {
    std::stable_sort(subs.begin(), subs.end(),
                     [&qpu](const SubQPU& a, const SubQPU& b) {
                         if (a.average_fidelity != b.average_fidelity) {
                             return a.average_fidelity > b.average_fidelity;
                         }
                         if (a.product_fidelity != b.product_fidelity) {
                             return a.product_fidelity > b.product_fidelity;
                         }
                         const int pa = priority_count(a.qubits, qpu.priority_qubits);
                         const int pb = priority_count(b.qubits, qpu.priority_qubits);
                         if (pa != pb) {
                             return pa > pb;
                         }
                         return a.qubits < b.qubits;
                     });
}

SubQPU make_subqpu(const QPU& qpu, std::vector<int> qubits,
                   const std::string& strategy) {
    SubQPU sub;
    sub.parent = qpu.name;
    std::ranges::sort(qubits);
    sub.qubits = std::move(qubits);
    sub.graph = qpu.coupling.induced(sub.qubits);
    sub.strategy = strategy;
    if (sub.qubits.size() == 1) {
        sub.average_fidelity = qpu.single_fidelity(sub.qubits[0]);
        sub.product_fidelity = sub.average_fidelity;
        return sub;
    }
    double sum = 0.0;
    double product = 1.0;
    int count = 0;
    for (const auto& [u, v, w] : sub.graph.edges()) {
        sum += w;
        product *= w;
        count++;
    }
    sub.average_fidelity = count == 0 ? 0.0 : sum / count;
    sub.product_fidelity = product;
    return sub;
}

/// Grow a seed edge to `n` qubits; empty result when the component is
/// too small.
std::vector<int> grow(const QPU& qpu, int u, int v, int n,
                      const std::string& strategy, std::mt19937_64& rng) {
    std::set<int> sub = {u, v};
    while (static_cast<int>(sub.size()) < n) {
        std::set<int> candidates;
        for (int node : sub) {
            for (int nb : qpu.coupling.neighbors(node)) {
                if (sub.count(nb) == 0) {
                    candidates.insert(nb);
                }
            }
        }
        if (candidates.empty()) {
            return {};
        }
        int chosen = -1;
        if (strategy == "fidelity") {
            // Best two-qubit fidelity on any edge into the current set.
            double best = -1.0;
            for (int cand : candidates) {
                double f = 0.0;
                for (int node : sub) {
                    if (qpu.coupling.has_edge(cand, node)) {
                        f = std::max(f, qpu.coupling.edge_weight(cand, node));
                    }
                }
                if (f > best) {
                    best = f;
                    chosen = cand;
                }
            }
        } else if (strategy == "degree") {
            int best = -1;
            for (int cand : candidates) {
                if (qpu.coupling.degree(cand) > best) {
                    best = qpu.coupling.degree(cand);
                    chosen = cand;
                }
            }
        } else if (strategy == "random") {
            std::vector<int> pool(candidates.begin(), candidates.end());
            chosen = pool[std::uniform_int_distribution<size_t>(
                0, pool.size() - 1)(rng)];
        } else {
            throw std::runtime_error("unknown mining strategy: " + strategy);
        }
        sub.insert(chosen);
    }
    return {sub.begin(), sub.end()};
}

json vqpu_to_json(const VQPU& v) {
    return {{"parent", v.parent},
            {"virtual_to_physical", v.virtual_to_physical},
            {"graph", graph_to_json(v.graph)},
            {"average_fidelity", v.average_fidelity},
            {"product_fidelity", v.product_fidelity}};
}

VQPU vqpu_from_json(const json& j) {
    VQPU v;
    v.parent = j.at("parent").get<std::string>();
    v.virtual_to_physical = j.at("virtual_to_physical").get<std::vector<int>>();
    v.graph = graph_from_json(j.at("graph"));
    v.average_fidelity = j.at("average_fidelity").get<double>();
    v.product_fidelity = j.at("product_fidelity").get<double>();
    return v;
}

json qpu_to_json(const QPU& q) {
    json fid = json::object();
    for (const auto& [node, f] : q.single_qubit_fidelity) {
        fid[std::to_string(node)] = f;
    }
    json j = {{"name", q.name},
              {"chip_type", q.chip_type},
              {"id", q.id},
              {"qubits_num", q.qubits_num},
              {"coupling", graph_to_json(q.coupling)},
              {"single_qubit_fidelity", fid},
              {"basis_gates", q.basis_gates},
              {"status", q.status},
              {"priority_qubits", q.priority_qubits}};
    if (q.max_gate_count.has_value()) {
        j["max_gate_count"] = *q.max_gate_count;
    }
    return j;
}

QPU qpu_from_json(const json& j) {
    QPU q;
    q.name = j.at("name").get<std::string>();
    q.chip_type = j.at("chip_type").get<std::string>();
    q.id = j.at("id").get<std::string>();
    q.qubits_num = j.at("qubits_num").get<int>();
    q.coupling = graph_from_json(j.at("coupling"));
    for (const auto& [key, value] : j.at("single_qubit_fidelity").items()) {
        q.single_qubit_fidelity[std::stoi(key)] = value.get<double>();
    }
    q.basis_gates = j.at("basis_gates").get<std::vector<std::string>>();
    q.status = j.at("status").get<std::string>();
    q.priority_qubits = j.at("priority_qubits").get<std::vector<int>>();
    if (j.contains("max_gate_count")) {
        q.max_gate_count = j.at("max_gate_count").get<int>();
    }
    return q;
}

}  // namespace

double QPU::single_fidelity(int q) const {
    auto it = single_qubit_fidelity.find(q);
    return it == single_qubit_fidelity.end() ? kDefaultSingleQubitFidelity
                                             : it->second;
}

Backend QPU::to_backend() const {
    Backend b;
    b.name = name;
    b.backend_type = chip_type;
    b.qubits_num = qubits_num;
    for (const auto& [u, v, w] : coupling.edges()) {
        b.coupling_list.push_back({u, v, w});
    }
    b.basis_gates = basis_gates;
    b.single_qubit_fidelity = single_qubit_fidelity;
    b.max_gate_count = max_gate_count;
    b.status = status;
    b.priority_qubits = priority_qubits;
    return b;
}

Backend VQPU::to_backend(const QPU& parent_qpu) const {
    Backend b;
    b.name = parent + "-v" + std::to_string(num_qubits());
    b.backend_type = parent_qpu.chip_type;
    b.qubits_num = num_qubits();
    for (const auto& [u, v, w] : graph.edges()) {
        b.coupling_list.push_back({u, v, w});
    }
    b.basis_gates = parent_qpu.basis_gates;
    for (int v = 0; v < num_qubits(); v++) {
        b.single_qubit_fidelity[v] =
            parent_qpu.single_fidelity(virtual_to_physical[v]);
    }
    b.max_gate_count = parent_qpu.max_gate_count;
    b.status = parent_qpu.status;
    return b;
}

QPU parse_chip_document(const std::string& name, const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("chip document is not valid JSON: ") +
                                 e.what());
    }
    QPU q;
    q.name = name.empty() ? j.value("name", "") : name;
    if (q.name.empty()) {
        throw std::runtime_error("chip document missing name");
    }
    q.chip_type = j.value("backend_type", "superconducting");
    q.id = j.value("id", q.name);
    if (!j.contains("qubits_num") || !j.at("qubits_num").is_number_integer()) {
        throw std::runtime_error("chip document missing integer qubits_num");
    }
    q.qubits_num = j.at("qubits_num").get<int>();
    if (q.qubits_num < 1) {
        throw std::runtime_error("qubits_num must be positive");
    }
    for (int node = 0; node < q.qubits_num; node++) {
        q.coupling.add_node(node);
    }
    if (!j.contains("coupling_list") || !j.at("coupling_list").is_array()) {
        throw std::runtime_error("chip document missing coupling_list");
    }
    for (const auto& e : j.at("coupling_list")) {
        if (!e.is_array() || e.size() != 3) {
            throw std::runtime_error("coupling_list entries must be [q1, q2, f]");
        }
        const int a = e.at(0).get<int>();
        const int b = e.at(1).get<int>();
        const double f = e.at(2).get<double>();
        if (a < 0 || a >= q.qubits_num || b < 0 || b >= q.qubits_num || a == b) {
            throw std::runtime_error("inconsistent coupling indices: (" +
                                     std::to_string(a) + ", " +
                                     std::to_string(b) + ")");
        }
        if (f < 0.0 || f > 1.0) {
            throw std::runtime_error("coupling fidelity outside [0,1]");
        }
        q.coupling.add_edge(a, b, f);
    }
    q.basis_gates = j.value("basis_gates", std::vector<std::string>{
                                               "cx", "rx", "ry", "rz"});
    if (j.contains("single_qubit_fidelity")) {
        for (const auto& [key, value] : j.at("single_qubit_fidelity").items()) {
            const int node = std::stoi(key);
            const double f = value.get<double>();
            if (node < 0 || node >= q.qubits_num || f < 0.0 || f > 1.0) {
                throw std::runtime_error("bad single_qubit_fidelity entry");
            }
            q.single_qubit_fidelity[node] = f;
        }
    }
    q.status = j.value("status", "online");
    if (q.status != "online" && q.status != "offline") {
        throw std::runtime_error("status must be online or offline");
    }
    if (j.contains("priority_qubits")) {
        q.priority_qubits = j.at("priority_qubits").get<std::vector<int>>();
    }
    if (j.contains("max_gate_count")) {
        q.max_gate_count = j.at("max_gate_count").get<int>();
    }
    return q;
}

StdQPU build_stdqpu(const QPU& qpu) {
    // The chip documents we ingest use row-major qubit ids, so a column
    // count under which every coupling is a lattice neighbor recovers
    // the grid. Prefer the squarest valid shape.
    const auto edges = qpu.coupling.edges();
    StdQPU best;
    int best_gap = -1;
    for (int cols = 1; cols <= qpu.qubits_num; cols++) {
        bool ok = true;
        for (const auto& [u, v, w] : edges) {
            const bool vertical = v - u == cols;
            const bool horizontal = v - u == 1 && u / cols == v / cols;
            if (!vertical && !horizontal) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        const int rows = (qpu.qubits_num - 1) / cols + 1;
        const int gap = std::abs(rows - cols);
        if (best_gap < 0 || gap < best_gap ||
            (gap == best_gap && cols > best.cols)) {
            best_gap = gap;
            best.rows = rows;
            best.cols = cols;
        }
    }
    if (best_gap < 0) {
        best.rows = 1;
        best.cols = qpu.qubits_num;
        best.degenerate = true;
    }
    for (int node = 0; node < qpu.qubits_num; node++) {
        best.embedding[node] = {node / best.cols, node % best.cols};
    }
    return best;
}

std::map<int, std::vector<SubQPU>> find_substructures(
    const QPU& qpu, int n_max, const std::set<std::string>& strategies,
    std::uint64_t seed) {
    if (n_max < 1) {
        throw std::runtime_error("n_max must be >= 1");
    }
    std::map<int, std::vector<SubQPU>> out;

    std::vector<SubQPU> singles;
    for (int node : qpu.coupling.nodes()) {
        singles.push_back(make_subqpu(qpu, {node}, "fidelity"));
    }
    sort_subqpus(singles, qpu);
    out[1] = std::move(singles);

    auto edges = qpu.coupling.edges();
    std::stable_sort(edges.begin(), edges.end(),
                     [](const auto& a, const auto& b) {
                         return std::get<2>(a) > std::get<2>(b);
                     });
    if (n_max >= 2) {
        std::vector<SubQPU> pairs;
        for (const auto& [u, v, w] : edges) {
            pairs.push_back(make_subqpu(qpu, {u, v}, "fidelity"));
        }
        sort_subqpus(pairs, qpu);
        out[2] = std::move(pairs);
    }

    std::mt19937_64 rng(seed);
    for (int n = 3; n <= n_max; n++) {
        std::vector<SubQPU> subs;
        std::set<std::vector<int>> seen;
        for (const std::string& strategy : {"fidelity", "degree", "random"}) {
            if (strategies.count(strategy) == 0) {
                continue;
            }
            for (const auto& [u, v, w] : edges) {
                std::vector<int> qubits = grow(qpu, u, v, n, strategy, rng);
                if (qubits.empty() || !seen.insert(qubits).second) {
                    continue;
                }
                subs.push_back(make_subqpu(qpu, qubits, strategy));
            }
        }
        sort_subqpus(subs, qpu);
        if (static_cast<int>(subs.size()) > kMaxSubstructuresPerSize) {
            subs.resize(kMaxSubstructuresPerSize);
        }
        out[n] = std::move(subs);
    }
    for (auto& [n, subs] : out) {
        if (static_cast<int>(subs.size()) > kMaxSubstructuresPerSize) {
            subs.resize(kMaxSubstructuresPerSize);
        }
    }
    return out;
}

std::vector<VQPU> build_vqpus(const std::vector<SubQPU>& subs, const QPU& qpu) {
    std::vector<VQPU> out;
    for (const auto& sub : subs) {
        VQPU v;
        v.parent = qpu.name;
        v.virtual_to_physical = sub.qubits;  // already ascending
        for (int i = 0; i < v.num_qubits(); i++) {
            v.graph.add_node(i);
        }
        for (int i = 0; i < v.num_qubits(); i++) {
            for (int k = i + 1; k < v.num_qubits(); k++) {
                const int pi = v.virtual_to_physical[i];
                const int pk = v.virtual_to_physical[k];
                if (qpu.coupling.has_edge(pi, pk)) {
                    v.graph.add_edge(i, k, qpu.coupling.edge_weight(pi, pk));
                }
            }
        }
        v.average_fidelity = sub.average_fidelity;
        v.product_fidelity = sub.product_fidelity;
        out.push_back(std::move(v));
    }
    return out;
}

std::map<int, int> register_chip(ResourceDB& db, const std::string& name,
                                 const std::string& chip_json_text,
                                 std::uint64_t mining_seed) {
    QPU qpu = parse_chip_document(name, chip_json_text);
    ChipRecord record;
    record.qpu = qpu;
    record.std_qpu = build_stdqpu(qpu);
    record.mining_seed = mining_seed;
    const int n_max = std::min(qpu.qubits_num, kMaxSubstructureSize);
    auto subs = find_substructures(qpu, n_max, {"fidelity", "degree", "random"},
                                   mining_seed);
    std::map<int, int> counts;
    for (const auto& [n, list] : subs) {
        record.vqpus[n] = build_vqpus(list, qpu);
        counts[n] = static_cast<int>(list.size());
    }
    db.chips[qpu.name] = std::move(record);
    return counts;
}

void save_db(const ResourceDB& db, const std::string& dir) {
    fs::create_directories(dir);
    for (const auto& [name, record] : db.chips) {
        json j;
        j["version"] = 1;
        j["qpu"] = qpu_to_json(record.qpu);
        json emb = json::object();
        for (const auto& [node, rc] : record.std_qpu.embedding) {
            emb[std::to_string(node)] = {rc.first, rc.second};
        }
        j["std_qpu"] = {{"rows", record.std_qpu.rows},
                        {"cols", record.std_qpu.cols},
                        {"embedding", emb},
                        {"degenerate", record.std_qpu.degenerate}};
        json vq = json::object();
        for (const auto& [n, list] : record.vqpus) {
            json arr = json::array();
            for (const auto& v : list) {
                arr.push_back(vqpu_to_json(v));
            }
            vq[std::to_string(n)] = arr;
        }
        j["vqpus"] = vq;
        j["mining_seed"] = record.mining_seed;
        fs::create_directories(fs::path(dir) / name);
        std::ofstream out(fs::path(dir) / name / "record.json",
                          std::ios::trunc);
        out << j.dump(2) << "\n";
    }
}

ResourceDB load_db(const std::string& dir) {
    ResourceDB db;
    if (!fs::exists(dir)) {
        throw std::runtime_error("database directory not found: " + dir);
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_directory()) {
            continue;
        }
        const fs::path file = entry.path() / "record.json";
        if (!fs::exists(file)) {
            continue;
        }
        std::ifstream in(file);
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw std::runtime_error("corrupt database document " +
                                     file.string() + ": " + e.what());
        }
        if (!j.contains("version") || j.at("version").get<int>() != 1) {
            throw std::runtime_error("unsupported database version in " +
                                     file.string());
        }
        ChipRecord record;
        record.qpu = qpu_from_json(j.at("qpu"));
        const json& sq = j.at("std_qpu");
        record.std_qpu.rows = sq.at("rows").get<int>();
        record.std_qpu.cols = sq.at("cols").get<int>();
        record.std_qpu.degenerate = sq.at("degenerate").get<bool>();
        for (const auto& [key, value] : sq.at("embedding").items()) {
            record.std_qpu.embedding[std::stoi(key)] = {
                value.at(0).get<int>(), value.at(1).get<int>()};
        }
        for (const auto& [key, value] : j.at("vqpus").items()) {
            std::vector<VQPU> list;
            for (const auto& item : value) {
                list.push_back(vqpu_from_json(item));
            }
            record.vqpus[std::stoi(key)] = std::move(list);
        }
        record.mining_seed = j.at("mining_seed").get<std::uint64_t>();
        db.chips[record.qpu.name] = std::move(record);
    }
    return db;
}

}  // namespace qsc
