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

#include <doctest.h>
#include <json.hpp>

#include "qsc/compile.hpp"
#include "qsc/passflow.hpp"
#include "qsc/random_circuit.hpp"
#include "qsc/statevector.hpp"

using namespace qsc;

namespace {

Backend line5() {
    Backend b;
    b.name = "line5";
    b.qubits_num = 5;
    b.coupling_list = {
        {0, 1, 0.99}, {1, 2, 0.98}, {2, 3, 0.97}, {3, 4, 0.96}};
    b.basis_gates = {"cx", "rx", "ry", "rz"};
    return b;
}

bool has_pass(const PassFlow& flow, const std::string& name) {
    for (const auto& d : flow.passes) {
        if (d.name == name) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("model matrices") {
    Model m;
    m.backend = line5();
    CHECK(m.distance_matrix()(0, 4) == 4);
    CHECK(m.fidelity_matrix()(0, 2) == doctest::Approx(0.99 * 0.98));
    CHECK(m.next_hop()(0, 4) == 1);
}

TEST_CASE("backend validation") {
    Backend b = line5();
    CHECK(b.validate());
    b.coupling_list.push_back({0, 9, 0.9});
    CHECK_THROWS(b.validate());
    Backend split = line5();
    split.coupling_list.erase(split.coupling_list.begin() + 1);
    CHECK_FALSE(split.validate());  // disconnected is a warning
}

TEST_CASE("preset passflows") {
    const PassFlow l0 = preset_passflow(0);
    CHECK_FALSE(has_pass(l0, "sabre_route"));
    CHECK(has_pass(l0, "unroll_to_basis"));

    const PassFlow l1 = preset_passflow(1);
    CHECK(has_pass(l1, "sabre_route"));
    for (const auto& d : l1.passes) {
        if (d.name == "sabre_route") {
            CHECK(d.params.at("heuristic") == "H_D");
        }
        if (d.name == "sabre_layout") {
            CHECK(d.params.at("init") == "random");
        }
    }

    const PassFlow l2 = preset_passflow(2);
    CHECK(has_pass(l2, "cancel_inverses"));
    for (const auto& d : l2.passes) {
        if (d.name == "sabre_route") {
            CHECK(d.params.at("heuristic") == "H_M");
        }
    }

    const PassFlow l3 = preset_passflow(3);
    for (const auto& d : l3.passes) {
        if (d.name == "sabre_layout") {
            CHECK(d.params.at("iterations") == "3");
            CHECK(d.params.at("init") == "weight");
        }
    }
    CHECK_THROWS(preset_passflow(4));
}

TEST_CASE("run passflow reports and errors") {
    Model m;
    m.backend = line5();
    const Circuit c = random_circuit(4, 12, 99);

    auto [out, report] = run_passflow(c, preset_passflow(2), m);
    CHECK(report.entries.size() == preset_passflow(2).passes.size());
    for (const auto& e : report.entries) {
        CHECK(e.seconds >= 0.0);
    }
    CHECK_FALSE(report.final_layout_summary.empty());
    CHECK(equivalent_up_to_layout(c, out, *m.initial_layout, *m.final_layout,
                                  1e-8));

    // unknown pass is rejected before anything runs
    Model m2;
    m2.backend = line5();
    PassFlow bad;
    bad.passes.push_back({"mystery", {}});
    CHECK_THROWS_WITH_AS(run_passflow(c, bad, m2),
                         doctest::Contains("mystery"), std::runtime_error);

    // a failing pass names itself
    PassFlow failing;
    failing.passes.push_back({"substitute_params", {{"theta", "zzz"}}});
    CHECK_THROWS_WITH_AS(run_passflow(c, failing, m2),
                         doctest::Contains("substitute_params"),
                         std::runtime_error);

    // empty flow: unchanged circuit, empty report
    Model m3;
    m3.backend = line5();
    auto [same, empty_report] = run_passflow(c, PassFlow{}, m3);
    CHECK(same == c);
    CHECK(empty_report.entries.empty());
}

TEST_CASE("report rendering") {
    Model m;
    m.backend = line5();
    const Circuit c = random_circuit(3, 8, 7);
    auto [out, report] = run_passflow(c, preset_passflow(2), m);
    const std::string text = render_report(report, "text");
    CHECK(text.find("sabre_route") != std::string::npos);
    const auto j = nlohmann::json::parse(render_report(report, "json"));
    CHECK(j.at("passes").size() == report.entries.size());
    CHECK_THROWS(render_report(report, "yaml"));
}

TEST_CASE("passflow serialization round trip") {
    const PassFlow flow = preset_passflow(3);
    CHECK(parse_passflow(serialize_passflow(flow)) == flow);
    CHECK_THROWS(parse_passflow("{\"not\": \"an array\"}"));
}

TEST_CASE("bench report round trip") {
    std::vector<BenchRow> rows(2);
    rows[0] = {"ghz", "fid_H_M_degree", 4, 0.01, 7, 3, 0.2};
    rows[1] = {"qft", "struc_H_D_rand", 5, 0.02, 9, 6, 0.4};
    const auto back = parse_bench_json(bench_json(rows));
    REQUIRE(back.size() == 2);
    CHECK(back[1].strategy == "struc_H_D_rand");
    CHECK(back[1].median_depth == doctest::Approx(9));
    const std::string csv = bench_csv(rows);
    CHECK(csv.find("ghz,fid_H_M_degree,4") != std::string::npos);
}
