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
#include <optional>
#include <string>
#include <vector>

#include "qsc/layout.hpp"
#include "qsc/metrics.hpp"
#include "qsc/passflow.hpp"
#include "qsc/resourcedb.hpp"

namespace qsc {

/// Depth-cost decoherence factor K used when none is supplied.
inline constexpr double kDefaultDecoherenceFactor = 0.995;

struct CompileTask {
    std::string circuit;  // OpenQASM 2.0 text
    bool transpile = true;
    std::optional<std::string> qpu_name;
    /// Pin to exactly these physical qubits on the named chip,
    /// bypassing selection.
    std::optional<std::vector<int>> qubits_list;
    int optimization_level = 2;
    /// Custom flow; overrides the preset when set.
    std::optional<PassFlow> passflow;
    std::string vqpu_preferred = "fidelity";  // fidelity | structure
    std::uint64_t seed = 0;
};

struct CompiledInfo {
    std::string chip;
    /// Absent for verification-only runs (transpile = false).
    std::optional<VQPU> vqpu;
    std::optional<Layout> initial_layout;
    std::optional<Layout> final_layout;
    PassReport report;
    VerificationResult verification;
    double circuit_cost = 0.0;
};

struct CompileResult {
    std::string compiled_qasm;
    std::map<int, int> qubits_to_cbits;
    CompiledInfo info;
};

/// Full pipeline: standardize, select a VQPU (honoring pins), run the
/// preset or custom flow, route as a fallback when the flow left
/// coupling violations, then verify. With transpile = false the input
/// is only standardized and verified against the chip.
CompileResult compile_task(const CompileTask& task, const ResourceDB& db);

struct BenchRow {
    std::string circuit;
    std::string strategy;
    int qubits = 0;
    double median_seconds = 0.0;
    double median_depth = 0.0;
    double median_two_qubit_gates = 0.0;
    double median_cost = 0.0;
};

/// Compile every .qasm in `suite_dir` under each strategy "x_y_z"
/// (x in {fid, struc}; y in {H_D, H_Fi, H_M}; z in {rand, degree,
/// weight}), once per seed 0..seeds-1, and report per-pair medians of
/// wall time, depth, two-qubit gate count, and circuit cost.
std::vector<BenchRow> run_bench(const std::string& suite_dir,
                                const std::string& chip_path,
                                const std::vector<std::string>& strategies,
                                int seeds);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_bench_json(const std::string& text);

}  // namespace qsc
