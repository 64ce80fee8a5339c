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

#include "qsc/compile.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qsc/dag.hpp"
#include "qsc/qasm.hpp"
#include "qsc/selector.hpp"
#include "qsc/standardize.hpp"

namespace qsc {

namespace {

using nlohmann::json;

const ChipRecord& chip_record(const ResourceDB& db, const std::string& name) {
    auto it = db.chips.find(name);
    if (it == db.chips.end()) {
        throw std::runtime_error("unknown chip: " + name);
    }
    return it->second;
}

/// VQPU pinned to an explicit physical-qubit list (induced subgraph).
VQPU adhoc_vqpu(const QPU& qpu, std::vector<int> qubits) {
    std::ranges::sort(qubits);
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    for (int q : qubits) {
        if (!qpu.coupling.has_node(q)) {
            throw std::runtime_error("pinned qubit " + std::to_string(q) +
                                     " does not exist on chip " + qpu.name);
        }
    }
    VQPU v;
    v.parent = qpu.name;
    v.virtual_to_physical = qubits;
    std::map<int, int> to_virtual;
    for (size_t i = 0; i < qubits.size(); i++) {
        to_virtual[qubits[i]] = static_cast<int>(i);
        v.graph.add_node(static_cast<int>(i));
    }
    double sum = 0.0;
    int edges = 0;
    for (const auto& [a, b, w] : qpu.coupling.induced(qubits).edges()) {
        v.graph.add_edge(to_virtual.at(a), to_virtual.at(b), w);
        sum += w;
        v.product_fidelity *= w;
        edges++;
    }
    v.average_fidelity = edges > 0 ? sum / edges : 0.0;
    return v;
}

bool has_coupling_violation(const VerificationResult& r) {
    return std::ranges::any_of(r.violations, [](const auto& v) {
        return v.first == "coupling";
    });
}

std::map<int, int> measurement_map(const Circuit& circuit) {
    std::map<int, int> out;
    for (const auto& instr : circuit.instructions) {
        if (instr.kind == InstrKind::Measure) {
            out[instr.qubits[0]] = instr.clbits[0];
        }
    }
    return out;
}

/// Chip used for verification-only runs: the pinned one, else the
/// largest online chip (ties: first by name).
const ChipRecord& default_chip(const ResourceDB& db,
                               const std::optional<std::string>& name) {
    if (name.has_value()) {
        return chip_record(db, *name);
    }
    const ChipRecord* best = nullptr;
    for (const auto& [chip, record] : db.chips) {
        if (record.qpu.status != "online") {
            continue;
        }
        if (best == nullptr || record.qpu.qubits_num > best->qpu.qubits_num) {
            best = &record;
        }
    }
    if (best == nullptr) {
        throw std::runtime_error("resource database has no online chips");
    }
    return *best;
}

double median(std::vector<double> xs) {
    std::ranges::sort(xs);
    const size_t n = xs.size();
    if (n == 0) {
        return 0.0;
    }
    return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

/// Strategy "x_y_z": x = selection, z = layout init, y = the rest.
void parse_strategy(const std::string& s, std::string& prefer,
                    std::string& heuristic, std::string& init) {
    const auto first = s.find('_');
    const auto last = s.rfind('_');
    if (first == std::string::npos || last == first) {
        throw std::runtime_error("bad strategy (want x_y_z): " + s);
    }
    const std::string x = s.substr(0, first);
    const std::string y = s.substr(first + 1, last - first - 1);
    const std::string z = s.substr(last + 1);
    if (x == "fid") {
        prefer = "fidelity";
    } else if (x == "struc") {
        prefer = "structure";
    } else {
        throw std::runtime_error("bad selection mode in strategy: " + s);
    }
    if (y != "H_D" && y != "H_Fi" && y != "H_M") {
        throw std::runtime_error("bad heuristic in strategy: " + s);
    }
    heuristic = y;
    if (z == "rand") {
        init = "random";
    } else if (z == "degree" || z == "weight") {
        init = z;
    } else {
        throw std::runtime_error("bad layout strategy in strategy: " + s);
    }
}

}  // namespace

CompileResult compile_task(const CompileTask& task, const ResourceDB& db) {
    if (task.optimization_level < 0 || task.optimization_level > 3) {
        throw std::runtime_error("optimization level must be 0..3");
    }
    const Circuit circuit = standardize(parse_qasm(task.circuit));
    CompileResult result;

    if (!task.transpile) {
        const ChipRecord& record = default_chip(db, task.qpu_name);
        const Backend backend = record.qpu.to_backend();
        result.info.chip = record.qpu.name;
        result.info.verification = verify_program(circuit, backend);
        result.compiled_qasm = emit_qasm(circuit, {.allow_symbolic = true});
        result.qubits_to_cbits = measurement_map(circuit);
        if (result.info.verification.ok) {
            try {
                result.info.circuit_cost =
                    circuit_cost(circuit, backend, kDefaultDecoherenceFactor);
            } catch (const std::exception&) {
                // cost undefined for >2-qubit gates; leave 0
            }
        }
        return result;
    }

    // Pick a VQPU: explicit pin, else DB-wide selection.
    std::string chip_name;
    VQPU vqpu;
    std::optional<std::map<int, int>> witness;
    if (task.qubits_list.has_value()) {
        if (!task.qpu_name.has_value()) {
            throw std::runtime_error("--qubits requires a chip name");
        }
        const ChipRecord& record = chip_record(db, *task.qpu_name);
        if (static_cast<int>(task.qubits_list->size()) !=
            circuit.num_qubits()) {
            throw std::runtime_error(
                "pinned qubit list has " +
                std::to_string(task.qubits_list->size()) +
                " qubits but the circuit needs " +
                std::to_string(circuit.num_qubits()));
        }
        chip_name = record.qpu.name;
        vqpu = adhoc_vqpu(record.qpu, *task.qubits_list);
    } else {
        SelectionRequest req;
        req.qubits = circuit.num_qubits();
        req.circuit_graph = circuit_weighted_graph(circuit);
        req.chip = task.qpu_name;
        SelectionResult sel;
        if (task.vqpu_preferred == "structure") {
            sel = select_structure_first(db, req);
        } else if (task.vqpu_preferred == "fidelity") {
            sel = select_fidelity_first(db, req);
        } else {
            throw std::runtime_error("vqpu_preferred must be fidelity or structure");
        }
        chip_name = sel.chip;
        vqpu = sel.vqpu;
        witness = sel.mapping;
    }
    const QPU& qpu = chip_record(db, chip_name).qpu;

    Model model;
    model.backend = vqpu.to_backend(qpu);
    model.scratch["seed"] = std::to_string(task.seed);

    PassFlow flow =
        task.passflow.value_or(preset_passflow(task.optimization_level));
    if (witness.has_value()) {
        // An exact structure match pre-determines the placement; skip
        // layout search and start routing from the witness.
        Layout layout;
        for (const auto& [logical, virt] : *witness) {
            layout.assign(logical, virt);
        }
        model.initial_layout = layout;
        std::erase_if(flow.passes, [](const PassDescriptor& d) {
            return d.name == "sabre_layout";
        });
    }

    auto [compiled, report] = run_passflow(circuit, flow, model);
    result.info.verification = verify_program(compiled, model.backend);

    if (has_coupling_violation(result.info.verification)) {
        // Flows without a routing pass (level 0, custom) may leave
        // uncoupled gates; route what remains, then re-express swaps in
        // the basis.
        const std::string heuristic =
            task.optimization_level >= 2 ? "H_M" : "H_D";
        PassFlow fallback;
        fallback.passes.push_back({"sabre_route", {{"heuristic", heuristic}}});
        fallback.passes.push_back({"unroll_to_2q", {}});
        fallback.passes.push_back({"unroll_to_basis", {}});
        auto [routed, fallback_report] = run_passflow(compiled, fallback, model);
        compiled = routed;
        for (auto& entry : fallback_report.entries) {
            report.entries.push_back(entry);
        }
        report.initial_layout_summary = fallback_report.initial_layout_summary;
        report.final_layout_summary = fallback_report.final_layout_summary;
        result.info.verification = verify_program(compiled, model.backend);
    }

    result.compiled_qasm = emit_qasm(compiled);
    result.qubits_to_cbits = measurement_map(compiled);
    result.info.chip = chip_name;
    result.info.vqpu = vqpu;
    result.info.initial_layout = model.initial_layout;
    result.info.final_layout = model.final_layout;
    result.info.report = std::move(report);
    if (result.info.verification.ok) {
        result.info.circuit_cost =
            circuit_cost(compiled, model.backend, kDefaultDecoherenceFactor);
    }
    return result;
}

std::vector<BenchRow> run_bench(const std::string& suite_dir,
                                const std::string& chip_path,
                                const std::vector<std::string>& strategies,
                                int seeds) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(suite_dir)) {
        throw std::runtime_error("suite directory not found: " + suite_dir);
    }
    std::ifstream chip_in(chip_path);
    if (!chip_in) {
        throw std::runtime_error("cannot read chip file: " + chip_path);
    }
    std::stringstream chip_text;
    chip_text << chip_in.rdbuf();
    const std::string chip_name = fs::path(chip_path).stem().string();
    ResourceDB db;
    register_chip(db, chip_name, chip_text.str());

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(suite_dir)) {
        if (entry.path().extension() == ".qasm") {
            files.push_back(entry.path());
        }
    }
    std::ranges::sort(files);

    std::vector<BenchRow> rows;
    for (const auto& file : files) {
        std::ifstream in(file);
        std::stringstream qasm;
        qasm << in.rdbuf();
        for (const auto& strategy : strategies) {
            std::string prefer;
            std::string heuristic;
            std::string init;
            parse_strategy(strategy, prefer, heuristic, init);
            PassFlow flow;
            flow.passes.push_back({"unroll_to_2q", {}});
            flow.passes.push_back({"sabre_layout",
                                   {{"heuristic", heuristic},
                                    {"init", init},
                                    {"iterations", "1"}}});
            flow.passes.push_back({"sabre_route", {{"heuristic", heuristic}}});
            flow.passes.push_back({"unroll_to_basis", {}});
            flow.passes.push_back({"cancel_inverses", {}});
            flow.passes.push_back({"fuse_1q", {}});

            std::vector<double> times;
            std::vector<double> depths;
            std::vector<double> twoq;
            std::vector<double> costs;
            int qubits = 0;
            for (int seed = 0; seed < seeds; seed++) {
                CompileTask task;
                task.circuit = qasm.str();
                task.passflow = flow;
                task.vqpu_preferred = prefer;
                task.seed = static_cast<std::uint64_t>(seed);
                const auto start = std::chrono::steady_clock::now();
                CompileResult r = compile_task(task, db);
                const auto stop = std::chrono::steady_clock::now();
                if (!r.info.verification.ok) {
                    throw std::runtime_error("bench compile of " +
                                             file.filename().string() +
                                             " failed verification");
                }
                const Circuit out = parse_qasm(r.compiled_qasm);
                times.push_back(
                    std::chrono::duration<double>(stop - start).count());
                depths.push_back(out.depth());
                auto counts = out.gate_counts();
                twoq.push_back(counts.count(2) > 0 ? counts.at(2) : 0);
                costs.push_back(r.info.circuit_cost);
                qubits = r.info.vqpu.has_value() ? r.info.vqpu->num_qubits()
                                                 : out.num_qubits();
            }
            BenchRow row;
            row.circuit = file.stem().string();
            row.strategy = strategy;
            row.qubits = qubits;
            row.median_seconds = median(times);
            row.median_depth = median(depths);
            row.median_two_qubit_gates = median(twoq);
            row.median_cost = median(costs);
            rows.push_back(row);
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "circuit,strategy,qubits,median_seconds,median_depth,"
           "median_two_qubit_gates,median_cost\n";
    for (const auto& r : rows) {
        char line[256];
        std::snprintf(line, sizeof(line), "%s,%s,%d,%.6f,%.1f,%.1f,%.6f\n",
                      r.circuit.c_str(), r.strategy.c_str(), r.qubits,
                      r.median_seconds, r.median_depth,
                      r.median_two_qubit_gates, r.median_cost);
        out << line;
    }
    return out.str();
}

std::string bench_json(const std::vector<BenchRow>& rows) {
    json j = json::array();
    for (const auto& r : rows) {
        j.push_back({{"circuit", r.circuit},
                     {"strategy", r.strategy},
                     {"qubits", r.qubits},
                     {"median_seconds", r.median_seconds},
                     {"median_depth", r.median_depth},
                     {"median_two_qubit_gates", r.median_two_qubit_gates},
                     {"median_cost", r.median_cost}});
    }
    return j.dump(2);
}

std::vector<BenchRow> parse_bench_json(const std::string& text) {
    const json j = json::parse(text);
    std::vector<BenchRow> rows;
    for (const auto& item : j) {
        BenchRow r;
        r.circuit = item.at("circuit").get<std::string>();
        r.strategy = item.at("strategy").get<std::string>();
        r.qubits = item.at("qubits").get<int>();
        r.median_seconds = item.at("median_seconds").get<double>();
        r.median_depth = item.at("median_depth").get<double>();
        r.median_two_qubit_gates =
            item.at("median_two_qubit_gates").get<double>();
        r.median_cost = item.at("median_cost").get<double>();
        rows.push_back(r);
    }
    return rows;
}

}  // namespace qsc
