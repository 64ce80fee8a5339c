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

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "qsc/backend.hpp"
#include "qsc/graph.hpp"

namespace qsc {

/// A physical chip record: coupling topology with per-edge two-qubit
/// fidelities and per-node single-qubit fidelities.
struct QPU {
    std::string name;
    std::string chip_type = "superconducting";
    std::string id;
    int qubits_num = 0;
    WeightedGraph coupling;
    std::map<int, double> single_qubit_fidelity;
    std::vector<std::string> basis_gates;
    std::string status = "online";
    std::vector<int> priority_qubits;
    std::optional<int> max_gate_count;

    [[nodiscard]] double single_fidelity(int q) const;
    [[nodiscard]] Backend to_backend() const;
};

/// Idealized square-lattice embedding of a chip.
struct StdQPU {
    int rows = 0;
    int cols = 0;
    std::map<int, std::pair<int, int>> embedding;
    /// Set when the coupling is not lattice-like and a 1xN fallback was
    /// used instead.
    bool degenerate = false;
};

/// A mined connected substructure of a chip's coupling graph.
struct SubQPU {
    std::string parent;
    std::vector<int> qubits;  // sorted physical ids
    WeightedGraph graph;      // induced subgraph
    std::string strategy;
    double average_fidelity = 0.0;
    double product_fidelity = 1.0;
};

/// Virtualized device: virtual ids 0..n-1 plus the noise-weighted
/// coupling graph they span.
struct VQPU {
    std::string parent;
    std::vector<int> virtual_to_physical;  // index = virtual id
    WeightedGraph graph;                   // over virtual ids
    double average_fidelity = 0.0;
    double product_fidelity = 1.0;

    [[nodiscard]] int num_qubits() const {
        return static_cast<int>(virtual_to_physical.size());
    }
    /// Backend view for verification and routing against this VQPU.
    [[nodiscard]] Backend to_backend(const QPU& parent_qpu) const;
};

struct ChipRecord {
    QPU qpu;
    StdQPU std_qpu;
    /// VQPU lists keyed by qubit count, sorted by average fidelity
    /// descending (ties: product fidelity descending).
    std::map<int, std::vector<VQPU>> vqpus;
    std::uint64_t mining_seed = 0;
};

struct ResourceDB {
    std::map<std::string, ChipRecord> chips;
};

inline constexpr int kMaxSubstructureSize = 30;
inline constexpr int kMaxSubstructuresPerSize = 200;

/// Parse and validate a chip document (see README for the schema).
/// Throws on schema violations or inconsistent coupling indices.
QPU parse_chip_document(const std::string& name, const std::string& json_text);

/// Best-effort row-major lattice embedding; degrades to 1xN.
StdQPU build_stdqpu(const QPU& qpu);

/// Mine connected substructures for n = 1..n_max: nodes by 1q fidelity,
/// edges by 2q fidelity, and for n >= 3 growth from every seed edge per
/// strategy (fidelity | degree | random). Deduplicated, sorted by
/// average fidelity descending, truncated to the per-size cap.
std::map<int, std::vector<SubQPU>> find_substructures(
    const QPU& qpu, int n_max, const std::set<std::string>& strategies,
    std::uint64_t seed);

std::vector<VQPU> build_vqpus(const std::vector<SubQPU>& subs, const QPU& qpu);

/// Build and store the full record for one chip; replaces any previous
/// record. Returns per-size VQPU counts.
std::map<int, int> register_chip(ResourceDB& db, const std::string& name,
                                 const std::string& chip_json_text,
                                 std::uint64_t mining_seed = 0);

/// One directory per chip, each holding a versioned record.json.
void save_db(const ResourceDB& db, const std::string& dir);
ResourceDB load_db(const std::string& dir);

/// Reader/writer wrapper for concurrent use: readers take snapshots,
/// register_chip runs exclusively.
class ResourceDBStore {
public:
    explicit ResourceDBStore(ResourceDB db = {}) : db_(std::move(db)) {}

    [[nodiscard]] ResourceDB snapshot() const {
        std::shared_lock lock(mutex_);
        return db_;
    }

    std::map<int, int> update_chip(const std::string& name,
                                   const std::string& chip_json_text,
                                   std::uint64_t mining_seed = 0) {
        std::unique_lock lock(mutex_);
        return register_chip(db_, name, chip_json_text, mining_seed);
    }

private:
    mutable std::shared_mutex mutex_;
    ResourceDB db_;
};

}  // namespace qsc
