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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "qsc/compile.hpp"
#include "qsc/qasm.hpp"
#include "qsc/resourcedb.hpp"
#include "qsc/statevector.hpp"

using namespace qsc;
namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd =
        std::string(QSC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string fixtures() { return QSC_FIXTURES_DIR; }

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qsc_cli_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cli update-chip") {
    TempDir tmp;
    const std::string db = (tmp.path / "db").string();
    CHECK(run("update-chip --name line4 --file " + fixtures() +
              "/chip_line4.json --db " + db) == 0);
    const ResourceDB loaded = load_db(db);
    REQUIRE(loaded.chips.count("line4") == 1);
    CHECK(loaded.chips.at("line4").qpu.qubits_num == 4);

    // re-run leaves the record byte-identical
    const std::string before = read_file(fs::path(db) / "line4/record.json");
    CHECK(run("update-chip --name line4 --file " + fixtures() +
              "/chip_line4.json --db " + db) == 0);
    CHECK(read_file(fs::path(db) / "line4/record.json") == before);

    // malformed document
    std::ofstream(tmp.path / "bad.json") << "{ nope";
    CHECK(run("update-chip --name bad --file " +
              (tmp.path / "bad.json").string() + " --db " + db) == 1);
    CHECK(run("update-chip --name x --file /nonexistent.json --db " + db) ==
          1);
}

TEST_CASE("cli compile") {
    TempDir tmp;
    const std::string db = (tmp.path / "db").string();
    REQUIRE(run("update-chip --name line4 --file " + fixtures() +
                "/chip_line4.json --db " + db) == 0);

    const fs::path qasm = tmp.path / "bell.qasm";
    std::ofstream(qasm) << "OPENQASM 2.0;\nqreg q[3];\nh q[0];\n"
                           "cx q[0],q[2];\ncx q[0],q[1];\n";
    const std::string out_json = (tmp.path / "out.json").string();
    const std::string cmd = std::string(QSC_CLI_PATH) + " compile --qasm " +
                            qasm.string() + " --db " + db +
                            " --level 2 --seed 1 > " + out_json;
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    const auto j = nlohmann::json::parse(read_file(out_json));
    CHECK(j.at("compiled_info").at("verified").get<bool>());
    CHECK(j.at("compiled_info").at("chip").get<std::string>() == "line4");
    const Circuit compiled =
        parse_qasm(j.at("compiled_qasm").get<std::string>());
    CHECK(compiled.num_qubits() == 3);
    CHECK(j.at("qubits_to_cbits").size() == 3);

    // per-pass rows present in the report
    CHECK(!j.at("compiled_info").at("report").at("passes").empty());

    // text report also works
    CHECK(run("compile --qasm " + qasm.string() + " --db " + db +
              " --report text") == 0);

    // oversized circuit, verification-only -> exit 2
    const fs::path big = tmp.path / "big.qasm";
    std::ofstream(big) << "OPENQASM 2.0;\nqreg q[9];\nh q;\n";
    CHECK(run("compile --qasm " + big.string() + " --db " + db +
              " --no-transpile") == 2);

    // pinning a wrong-size qubit list is a user error
    CHECK(run("compile --qasm " + qasm.string() + " --db " + db +
              " --qpu line4 --qubits 0,1") == 1);
    // pinning the right size works
    CHECK(run("compile --qasm " + qasm.string() + " --db " + db +
              " --qpu line4 --qubits 0,1,2") == 0);
    // unknown chip
    CHECK(run("compile --qasm " + qasm.string() + " --db " + db +
              " --qpu mystery") == 1);
    // unknown flag
    CHECK(run("compile --qasm " + qasm.string() + " --db " + db +
              " --frobnicate") == 1);
}

TEST_CASE("cli compile determinism") {
    TempDir tmp;
    const std::string db = (tmp.path / "db").string();
    REQUIRE(run("update-chip --name line4 --file " + fixtures() +
                "/chip_line4.json --db " + db) == 0);
    const fs::path qasm = tmp.path / "c.qasm";
    std::ofstream(qasm) << "OPENQASM 2.0;\nqreg q[4];\nh q[0];\n"
                           "cx q[0],q[3];\ncx q[1],q[2];\ncx q[0],q[2];\n";
    std::string outputs[2];
    for (int i = 0; i < 2; i++) {
        const std::string out = (tmp.path / "o.json").string();
        const std::string cmd = std::string(QSC_CLI_PATH) +
                                " compile --qasm " + qasm.string() +
                                " --db " + db + " --seed 42 > " + out;
        REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
        outputs[i] = nlohmann::json::parse(read_file(out))
                         .at("compiled_qasm")
                         .get<std::string>();
    }
    CHECK(outputs[0] == outputs[1]);
}

TEST_CASE("cli bench") {
    TempDir tmp;
    const fs::path suite = tmp.path / "suite";
    fs::create_directories(suite);
    std::ofstream(suite / "a.qasm")
        << "OPENQASM 2.0;\nqreg q[3];\nh q[0];\ncx q[0],q[1];\n"
           "cx q[1],q[2];\n";
    std::ofstream(suite / "b.qasm")
        << "OPENQASM 2.0;\nqreg q[2];\nh q[0];\ncx q[0],q[1];\n";
    const std::string out = (tmp.path / "report.json").string();
    CHECK(run("bench --suite " + suite.string() + " --chip " + fixtures() +
              "/chip_line4.json --strategies fid_H_M_degree,struc_H_D_rand"
              " --seeds 3 --out " + out) == 0);
    const auto rows = parse_bench_json(read_file(out));
    CHECK(rows.size() == 4);  // 2 circuits x 2 strategies

    // CSV flavor
    const std::string csv = (tmp.path / "report.csv").string();
    CHECK(run("bench --suite " + suite.string() + " --chip " + fixtures() +
              "/chip_line4.json --strategies fid_H_M_degree --seeds 2"
              " --out " + csv) == 0);
    CHECK(read_file(csv).find("median_cost") != std::string::npos);

    // empty suite is fine
    const fs::path empty = tmp.path / "empty";
    fs::create_directories(empty);
    CHECK(run("bench --suite " + empty.string() + " --chip " + fixtures() +
              "/chip_line4.json --seeds 1 --out " + out) == 0);
    // unreadable suite
    CHECK(run("bench --suite /nonexistent_suite --chip " + fixtures() +
              "/chip_line4.json --seeds 1 --out " + out) == 1);
}
