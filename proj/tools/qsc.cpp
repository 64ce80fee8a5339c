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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsc/compile.hpp"
#include "qsc/passflow.hpp"
#include "qsc/resourcedb.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;
constexpr int kExitVerificationFailure = 2;
constexpr int kExitInternalError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read file: " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

qsc::ResourceDB load_db_if_present(const std::string& dir) {
    if (!std::filesystem::is_directory(dir)) {
        return {};
    }
    return qsc::load_db(dir);
}

int cmd_update_chip(const std::string& name, const std::string& file,
                    const std::string& db_dir, std::uint64_t seed) {
    const std::string chip_text = read_file(file);
    qsc::ResourceDBStore store(load_db_if_present(db_dir));
    const auto counts = store.update_chip(name, chip_text, seed);
    qsc::save_db(store.snapshot(), db_dir);
    std::cout << "chip '" << name << "' registered\n";
    for (const auto& [n, count] : counts) {
        std::cout << "  " << n << "-qubit VQPUs: " << count << "\n";
    }
    return kExitOk;
}

std::string layout_json(const std::optional<qsc::Layout>& layout) {
    if (!layout.has_value()) {
        return "";
    }
    json j = json::object();
    for (const auto& [l, p] : layout->logical_to_physical()) {
        j["q" + std::to_string(l)] = p;
    }
    return j.dump();
}

int cmd_compile(const std::string& qasm_path, const std::string& db_dir,
                const std::optional<std::string>& qpu,
                const std::optional<std::vector<int>>& qubits, int level,
                const std::optional<std::string>& passflow_path,
                const std::string& prefer, std::uint64_t seed,
                const std::string& report_format, bool no_transpile) {
    qsc::CompileTask task;
    task.circuit = read_file(qasm_path);
    task.transpile = !no_transpile;
    task.qpu_name = qpu;
    task.qubits_list = qubits;
    task.optimization_level = level;
    if (passflow_path.has_value()) {
        task.passflow = qsc::parse_passflow(read_file(*passflow_path));
    }
    task.vqpu_preferred = prefer;
    task.seed = seed;

    const qsc::ResourceDB db = load_db_if_present(db_dir);
    const qsc::CompileResult result = qsc::compile_task(task, db);
    const qsc::CompiledInfo& info = result.info;

    if (report_format == "json") {
        json j;
        j["compiled_qasm"] = result.compiled_qasm;
        json q2c = json::object();
        for (const auto& [q, c] : result.qubits_to_cbits) {
            q2c[std::to_string(q)] = c;
        }
        j["qubits_to_cbits"] = q2c;
        json ji;
        ji["chip"] = info.chip;
        if (info.vqpu.has_value()) {
            ji["vqpu_qubits"] = info.vqpu->virtual_to_physical;
            ji["vqpu_average_fidelity"] = info.vqpu->average_fidelity;
            ji["vqpu_product_fidelity"] = info.vqpu->product_fidelity;
        }
        ji["initial_layout"] = layout_json(info.initial_layout);
        ji["final_layout"] = layout_json(info.final_layout);
        ji["circuit_cost"] = info.circuit_cost;
        ji["report"] = json::parse(qsc::render_report(info.report, "json"));
        ji["verified"] = info.verification.ok;
        json viol = json::array();
        for (const auto& [id, msg] : info.verification.violations) {
            viol.push_back({{"check", id}, {"message", msg}});
        }
        ji["violations"] = viol;
        j["compiled_info"] = ji;
        std::cout << j.dump(2) << "\n";
    } else if (report_format == "text") {
        std::cout << result.compiled_qasm;
        std::cout << "\nchip: " << info.chip << "\n";
        if (info.vqpu.has_value()) {
            std::cout << "vqpu qubits:";
            for (int q : info.vqpu->virtual_to_physical) {
                std::cout << " " << q;
            }
            std::cout << "\n";
        }
        std::cout << "circuit cost: " << info.circuit_cost << "\n";
        std::cout << qsc::render_report(info.report, "text");
        if (!info.verification.ok) {
            std::cout << "verification FAILED:\n";
            for (const auto& [id, msg] : info.verification.violations) {
                std::cout << "  [" << id << "] " << msg << "\n";
            }
        }
    } else {
        throw std::runtime_error("unknown report format: " + report_format);
    }
    return info.verification.ok ? kExitOk : kExitVerificationFailure;
}

int cmd_bench(const std::string& suite, const std::string& chip,
              const std::string& strategies_csv, int seeds,
              const std::string& out_path) {
    std::vector<std::string> strategies;
    std::istringstream ss(strategies_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            strategies.push_back(item);
        }
    }
    const auto rows = qsc::run_bench(suite, chip, strategies, seeds);
    std::ofstream out(out_path);
    if (!out) {
        throw std::runtime_error("cannot write report: " + out_path);
    }
    if (out_path.size() >= 4 &&
        out_path.substr(out_path.size() - 4) == ".csv") {
        out << qsc::bench_csv(rows);
    } else {
        out << qsc::bench_json(rows) << "\n";
    }
    std::cout << rows.size() << " benchmark rows written to " << out_path
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum circuit compiler with chip virtualization"};
    app.require_subcommand(1);

    auto* update = app.add_subcommand("update-chip",
                                      "Register or refresh a chip record");
    std::string chip_name;
    std::string chip_file;
    std::string db_dir;
    std::uint64_t mining_seed = 0;
    update->add_option("--name", chip_name, "Chip name")->required();
    update->add_option("--file", chip_file, "Chip JSON document")->required();
    update->add_option("--db", db_dir, "Database directory")->required();
    update->add_option("--seed", mining_seed, "Substructure mining seed");

    auto* compile = app.add_subcommand("compile", "Compile an OpenQASM file");
    std::string qasm_path;
    std::string compile_db;
    std::string qpu;
    std::string qubits_csv;
    int level = 2;
    std::string passflow_path;
    std::string prefer = "fidelity";
    std::uint64_t seed = 0;
    std::string report_format = "json";
    bool no_transpile = false;
    compile->add_option("--qasm", qasm_path, "Input QASM file")->required();
    compile->add_option("--db", compile_db, "Database directory")->required();
    compile->add_option("--qpu", qpu, "Pin to this chip");
    compile->add_option("--qubits", qubits_csv,
                        "Pin to these physical qubits (CSV)");
    compile->add_option("--level", level, "Optimization level 0..3")
        ->check(CLI::Range(0, 3));
    compile->add_option("--passflow", passflow_path, "Custom passflow JSON");
    compile->add_option("--prefer", prefer, "VQPU selection mode")
        ->check(CLI::IsMember({"fidelity", "structure"}));
    compile->add_option("--seed", seed, "Compilation seed");
    compile->add_option("--report", report_format, "Report format")
        ->check(CLI::IsMember({"json", "text"}));
    compile->add_flag("--no-transpile", no_transpile,
                      "Verify against the chip without transpiling");

    auto* bench = app.add_subcommand("bench", "Benchmark a circuit suite");
    std::string suite;
    std::string bench_chip;
    std::string strategies = "fid_H_M_degree";
    int seeds = 5;
    std::string out_path;
    bench->add_option("--suite", suite, "Directory of .qasm files")->required();
    bench->add_option("--chip", bench_chip, "Chip JSON document")->required();
    bench->add_option("--strategies", strategies, "CSV of x_y_z strategies");
    bench->add_option("--seeds", seeds, "Runs per circuit/strategy")
        ->check(CLI::PositiveNumber);
    bench->add_option("--out", out_path, "Report path (.csv or .json)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUserError;
    }

    try {
        if (update->parsed()) {
            return cmd_update_chip(chip_name, chip_file, db_dir, mining_seed);
        }
        if (compile->parsed()) {
            std::optional<std::string> qpu_opt;
            if (!qpu.empty()) {
                qpu_opt = qpu;
            }
            std::optional<std::vector<int>> qubits_opt;
            if (!qubits_csv.empty()) {
                std::vector<int> qs;
                std::istringstream ss(qubits_csv);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    qs.push_back(std::stoi(item));
                }
                qubits_opt = qs;
            }
            std::optional<std::string> passflow_opt;
            if (!passflow_path.empty()) {
                passflow_opt = passflow_path;
            }
            return cmd_compile(qasm_path, compile_db, qpu_opt, qubits_opt,
                               level, passflow_opt, prefer, seed,
                               report_format, no_transpile);
        }
        if (bench->parsed()) {
            return cmd_bench(suite, bench_chip, strategies, seeds, out_path);
        }
        return kExitUserError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}
