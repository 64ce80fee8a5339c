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
#include <random>
#include <sstream>
#include <thread>

#include <doctest.h>

#include "qsc/resourcedb.hpp"

using namespace qsc;

namespace {

std::string line_chip_json(const std::vector<double>& fidelities) {
    std::ostringstream out;
    out << R"({"qubits_num": )" << fidelities.size() + 1
        << R"(, "coupling_list": [)";
    for (size_t i = 0; i < fidelities.size(); i++) {
        out << (i ? "," : "") << "[" << i << "," << i + 1 << ","
            << fidelities[i] << "]";
    }
    out << "]}";
    return out.str();
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture(const std::string& name) {
    return read_file(std::filesystem::path(QSC_FIXTURES_DIR) / name);
}

}  // namespace

TEST_CASE("chip document parsing") {
    const QPU q = parse_chip_document("dev", line_chip_json({0.99, 0.98}));
    CHECK(q.qubits_num == 3);
    CHECK(q.coupling.edge_weight(0, 1) == doctest::Approx(0.99));
    CHECK(q.basis_gates == std::vector<std::string>{"cx", "rx", "ry", "rz"});
    CHECK(q.single_fidelity(0) == doctest::Approx(0.996));

    CHECK_THROWS(parse_chip_document("d", "not json"));
    CHECK_THROWS(parse_chip_document("d", R"({"coupling_list": []})"));
    CHECK_THROWS(parse_chip_document(
        "d", R"({"qubits_num": 2, "coupling_list": [[0, 5, 0.9]]})"));
    CHECK_THROWS(parse_chip_document(
        "d", R"({"qubits_num": 2, "coupling_list": [[0, 1, 1.2]]})"));
    CHECK_THROWS(parse_chip_document(
        "d",
        R"({"qubits_num": 2, "coupling_list": [[0,1,0.9]], "status": "busy"})"));
}

TEST_CASE("stdqpu embedding") {
    // 2x2 grid
    const QPU grid = parse_chip_document(
        "g", R"({"qubits_num": 4,
                 "coupling_list": [[0,1,0.9],[2,3,0.9],[0,2,0.9],[1,3,0.9]]})");
    const StdQPU s = build_stdqpu(grid);
    CHECK(s.rows == 2);
    CHECK(s.cols == 2);
    CHECK_FALSE(s.degenerate);
    CHECK(s.embedding.at(3) == std::pair<int, int>{1, 1});

    // line of 4 -> 1x4
    const QPU line = parse_chip_document("l", line_chip_json({0.9, 0.9, 0.9}));
    const StdQPU sl = build_stdqpu(line);
    CHECK(sl.rows == 1);
    CHECK(sl.cols == 4);

    // triangle is not a lattice: degenerate fallback
    const QPU tri = parse_chip_document(
        "t", R"({"qubits_num": 3,
                 "coupling_list": [[0,1,0.9],[1,2,0.9],[0,2,0.9]]})");
    CHECK(build_stdqpu(tri).degenerate);

    // truncated lattice keeps its detected width
    const QPU big = parse_chip_document("b", fixture("grid122.json"));
    const StdQPU sb = build_stdqpu(big);
    CHECK(sb.cols == 13);
    CHECK(sb.rows == 10);
    CHECK(sb.embedding.at(61) == std::pair<int, int>{4, 9});
    CHECK(sb.embedding.size() == 122);
}

TEST_CASE("substructure mining fixtures") {
    // n=2 on a 3-node line: best edge first
    const QPU small = parse_chip_document("s", line_chip_json({0.99, 0.9}));
    auto subs = find_substructures(small, 2, {"fidelity"}, 0);
    REQUIRE(!subs[2].empty());
    CHECK(subs[2][0].qubits == std::vector<int>{0, 1});

    // 4-node line, fidelity growth from the best seed edge
    const QPU line4 =
        parse_chip_document("l4", line_chip_json({0.99, 0.98, 0.50}));
    subs = find_substructures(line4, 3, {"fidelity"}, 0);
    REQUIRE(!subs[3].empty());
    CHECK(subs[3][0].qubits == std::vector<int>{0, 1, 2});
}

TEST_CASE("substructure mining properties") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; trial++) {
        // random connected 10-node chip
        std::uniform_real_distribution<double> fid(0.8, 0.999);
        std::ostringstream edges;
        edges << R"({"qubits_num": 10, "coupling_list": [)";
        bool first = true;
        for (int i = 1; i < 10; i++) {
            const int parent = static_cast<int>(rng() % i);
            edges << (first ? "" : ",") << "[" << parent << "," << i << ","
                  << fid(rng) << "]";
            first = false;
        }
        for (int extra = 0; extra < 5; extra++) {
            const int a = static_cast<int>(rng() % 10);
            const int b = static_cast<int>(rng() % 10);
            if (a != b) {
                edges << ",[" << a << "," << b << "," << fid(rng) << "]";
            }
        }
        edges << "]}";
        const QPU qpu = parse_chip_document("r", edges.str());
        const auto subs = find_substructures(
            qpu, 10, {"fidelity", "degree", "random"}, trial);
        for (const auto& [n, list] : subs) {
            CHECK(static_cast<int>(list.size()) <= kMaxSubstructuresPerSize);
            double prev = 2.0;
            for (const auto& s : list) {
                CHECK(static_cast<int>(s.qubits.size()) == n);
                if (n >= 2) {
                    CHECK(s.graph.connected());
                }
                CHECK(s.average_fidelity <= prev + 1e-12);
                prev = s.average_fidelity;
            }
        }
    }
}

TEST_CASE("vqpus number virtual qubits from zero") {
    const QPU qpu = parse_chip_document("v", line_chip_json({0.99, 0.98}));
    const auto subs = find_substructures(qpu, 3, {"fidelity"}, 0);
    const auto vqpus = build_vqpus(subs.at(3), qpu);
    REQUIRE(!vqpus.empty());
    const VQPU& v = vqpus[0];
    CHECK(v.virtual_to_physical == std::vector<int>{0, 1, 2});
    CHECK(v.graph.has_edge(0, 1));
    CHECK(v.graph.has_edge(1, 2));
    double product = 1.0;
    for (const auto& [a, b, w] : v.graph.edges()) {
        product *= w;
    }
    CHECK(v.product_fidelity == doctest::Approx(product));
    const Backend b = v.to_backend(qpu);
    CHECK(b.qubits_num == 3);
    CHECK(b.has_edge(0, 1));
}

TEST_CASE("database persistence round trip") {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / "qsc_dbtest";
    fs::remove_all(dir);

    ResourceDB db;
    register_chip(db, "alpha", line_chip_json({0.99, 0.97, 0.95}), 7);
    save_db(db, dir.string());
    const ResourceDB loaded = load_db(dir.string());
    REQUIRE(loaded.chips.count("alpha") == 1);
    CHECK(loaded.chips.at("alpha").qpu.qubits_num == 4);
    CHECK(loaded.chips.at("alpha").mining_seed == 7);

    // identical rebuild must serialize byte-identically
    const std::string before = read_file(dir / "alpha" / "record.json");
    ResourceDB db2;
    register_chip(db2, "alpha", line_chip_json({0.99, 0.97, 0.95}), 7);
    save_db(db2, dir.string());
    CHECK(read_file(dir / "alpha" / "record.json") == before);

    // corrupt record rejected
    std::ofstream(dir / "alpha" / "record.json") << "{ truncated";
    CHECK_THROWS(load_db(dir.string()));
    fs::remove_all(dir);
}

TEST_CASE("store serializes concurrent access") {
    ResourceDBStore store;
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; t++) {
        workers.emplace_back([&store, t] {
            for (int i = 0; i < 5; i++) {
                store.update_chip("chip" + std::to_string(t),
                                  line_chip_json({0.99, 0.98}));
                (void)store.snapshot();
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    CHECK(store.snapshot().chips.size() == 4);
}
