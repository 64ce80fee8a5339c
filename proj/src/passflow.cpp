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

#include "qsc/passflow.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qsc/mapping.hpp"
#include "qsc/optimize.hpp"
#include "qsc/unroll.hpp"

namespace qsc {

namespace {

using nlohmann::json;

std::string param_or(const std::map<std::string, std::string>& params,
                     const std::string& key, const std::string& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

Heuristic parse_heuristic(const std::string& name) {
    if (name == "H_D") {
        return Heuristic::HD;
    }
    if (name == "H_Fi") {
        return Heuristic::HFi;
    }
    if (name == "H_M") {
        return Heuristic::HM;
    }
    throw std::runtime_error("unknown heuristic: " + name);
}

InitStrategy parse_strategy(const std::string& name) {
    if (name == "degree") {
        return InitStrategy::Degree;
    }
    if (name == "weight") {
        return InitStrategy::Weight;
    }
    if (name == "random") {
        return InitStrategy::Random;
    }
    throw std::runtime_error("unknown layout strategy: " + name);
}

std::uint64_t seed_of(const Model& m,
                      const std::map<std::string, std::string>& params) {
    auto it = params.find("seed");
    if (it != params.end()) {
        return std::stoull(it->second);
    }
    auto jt = m.scratch.find("seed");
    return jt == m.scratch.end() ? 0 : std::stoull(jt->second);
}

std::string layout_summary(const std::optional<Layout>& layout) {
    if (!layout.has_value()) {
        return "";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [l, p] : layout->logical_to_physical()) {
        out << (first ? "" : " ") << "q" << l << "->Q" << p;
        first = false;
    }
    return out.str();
}

Circuit pass_unroll_to_2q(const Circuit& c, Model& /*m*/,
                          const std::map<std::string, std::string>& /*params*/) {
    return from_dag(unroll_to_two_qubit(to_dag(c)));
}

Circuit pass_unroll_to_basis(const Circuit& c, Model& m,
                             const std::map<std::string, std::string>& params) {
    std::set<std::string> basis;
    auto it = params.find("basis");
    if (it != params.end()) {
        std::istringstream ss(it->second);
        std::string name;
        while (std::getline(ss, name, ',')) {
            basis.insert(name);
        }
    } else {
        basis.insert(m.backend.basis_gates.begin(), m.backend.basis_gates.end());
    }
    return from_dag(unroll_to_basis(to_dag(c), basis));
}

Circuit pass_sabre_layout(const Circuit& c, Model& m,
                          const std::map<std::string, std::string>& params) {
    const Heuristic h = parse_heuristic(param_or(params, "heuristic", "H_M"));
    const InitStrategy s = parse_strategy(param_or(params, "init", "degree"));
    const int iterations = std::stoi(param_or(params, "iterations", "1"));
    m.initial_layout =
        sabre_layout(to_dag(c), m, h, s, iterations, seed_of(m, params));
    return c;
}

Circuit pass_sabre_route(const Circuit& c, Model& m,
                         const std::map<std::string, std::string>& params) {
    const Heuristic h = parse_heuristic(param_or(params, "heuristic", "H_M"));
    Layout start = m.initial_layout.value_or(Layout::identity(c.num_qubits()));
    RoutingResult r = sabre_route(to_dag(c), m, h, start, seed_of(m, params));
    if (!m.initial_layout.has_value()) {
        m.initial_layout = Layout::identity(c.num_qubits());
    }
    m.final_layout = r.final_layout;
    m.scratch["swap_count"] = std::to_string(r.swap_count);
    return r.circuit;
}

Circuit pass_cancel_inverses(const Circuit& c, Model& /*m*/,
                             const std::map<std::string, std::string>& /*p*/) {
    return from_dag(cancel_inverses(to_dag(c)));
}

Circuit pass_fuse_1q(const Circuit& c, Model& /*m*/,
                     const std::map<std::string, std::string>& /*p*/) {
    return from_dag(fuse_1q(to_dag(c)));
}

Circuit pass_substitute_params(const Circuit& c, Model& /*m*/,
                               const std::map<std::string, std::string>& params) {
    std::map<std::string, double> bindings;
    for (const auto& [k, v] : params) {
        if (k != "seed") {
            bindings[k] = std::stod(v);
        }
    }
    return from_dag(substitute_params(to_dag(c), bindings));
}

}  // namespace

const std::map<std::string, PassFn>& pass_registry() {
    static const std::map<std::string, PassFn> registry = {
        {"unroll_to_2q", pass_unroll_to_2q},
        {"unroll_to_basis", pass_unroll_to_basis},
        {"sabre_layout", pass_sabre_layout},
        {"sabre_route", pass_sabre_route},
        {"cancel_inverses", pass_cancel_inverses},
        {"fuse_1q", pass_fuse_1q},
        {"substitute_params", pass_substitute_params},
    };
    return registry;
}

std::pair<Circuit, PassReport> run_passflow(const Circuit& circuit,
                                            const PassFlow& flow, Model& model) {
    const auto& registry = pass_registry();
    for (const auto& d : flow.passes) {
        if (registry.count(d.name) == 0) {
            throw std::runtime_error("unknown pass: " + d.name);
        }
    }
    Circuit current = circuit;
    PassReport report;
    for (const auto& d : flow.passes) {
        PassReportEntry entry;
        entry.name = d.name;
        entry.pre_gate_counts = current.gate_counts();
        entry.pre_depth = current.depth();
        const auto start = std::chrono::steady_clock::now();
        try {
            current = registry.at(d.name)(current, model, d.params);
        } catch (const std::exception& e) {
            throw std::runtime_error("pass '" + d.name + "' failed: " + e.what());
        }
        const auto stop = std::chrono::steady_clock::now();
        entry.seconds = std::chrono::duration<double>(stop - start).count();
        entry.post_gate_counts = current.gate_counts();
        entry.post_depth = current.depth();
        report.entries.push_back(entry);
    }
    report.initial_layout_summary = layout_summary(model.initial_layout);
    report.final_layout_summary = layout_summary(model.final_layout);
    return {current, report};
}

PassFlow preset_passflow(int level) {
    if (level < 0 || level > 3) {
        throw std::runtime_error("optimization level must be 0..3");
    }
    PassFlow flow;
    flow.passes.push_back({"unroll_to_2q", {}});
    if (level >= 1) {
        const std::string heuristic = level == 1 ? "H_D" : "H_M";
        const std::string init =
            level == 1 ? "random" : (level == 3 ? "weight" : "degree");
        const std::string iterations = level == 3 ? "3" : "1";
        flow.passes.push_back({"sabre_layout",
                               {{"heuristic", heuristic},
                                {"init", init},
                                {"iterations", iterations}}});
        flow.passes.push_back({"sabre_route", {{"heuristic", heuristic}}});
    }
    flow.passes.push_back({"unroll_to_basis", {}});
    if (level >= 2) {
        flow.passes.push_back({"cancel_inverses", {}});
        flow.passes.push_back({"fuse_1q", {}});
        flow.passes.push_back({"substitute_params", {}});
    }
    return flow;
}

std::string render_report(const PassReport& report, const std::string& format) {
    auto counts_json = [](const std::map<int, int>& counts) {
        json j = json::object();
        for (const auto& [arity, count] : counts) {
            j[std::to_string(arity) + "q"] = count;
        }
        return j;
    };
    if (format == "json") {
        json j;
        j["passes"] = json::array();
        for (const auto& e : report.entries) {
            j["passes"].push_back({{"name", e.name},
                                   {"seconds", e.seconds},
                                   {"pre_depth", e.pre_depth},
                                   {"post_depth", e.post_depth},
                                   {"pre_gate_counts", counts_json(e.pre_gate_counts)},
                                   {"post_gate_counts",
                                    counts_json(e.post_gate_counts)}});
        }
        j["initial_layout"] = report.initial_layout_summary;
        j["final_layout"] = report.final_layout_summary;
        return j.dump(2);
    }
    if (format != "text") {
        throw std::runtime_error("unknown report format: " + format);
    }
    std::ostringstream out;
    out << "pass                 time(s)   depth          gates\n";
    for (const auto& e : report.entries) {
        auto total = [](const std::map<int, int>& counts) {
            int n = 0;
            for (const auto& [arity, count] : counts) {
                n += count;
            }
            return n;
        };
        char line[160];
        std::snprintf(line, sizeof(line), "%-20s %8.4f %4d->%-4d %6d->%-6d\n",
                      e.name.c_str(), e.seconds, e.pre_depth, e.post_depth,
                      total(e.pre_gate_counts), total(e.post_gate_counts));
        out << line;
    }
    if (!report.initial_layout_summary.empty()) {
        out << "initial layout: " << report.initial_layout_summary << "\n";
    }
    if (!report.final_layout_summary.empty()) {
        out << "final layout:   " << report.final_layout_summary << "\n";
    }
    return out.str();
}

PassFlow parse_passflow(const std::string& json_text) {
    const json j = json::parse(json_text);
    if (!j.is_array()) {
        throw std::runtime_error("passflow document must be a JSON array");
    }
    PassFlow flow;
    for (const auto& item : j) {
        PassDescriptor d;
        d.name = item.at("name").get<std::string>();
        if (item.contains("params")) {
            for (const auto& [k, v] : item.at("params").items()) {
                d.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
            }
        }
        flow.passes.push_back(d);
    }
    return flow;
}

std::string serialize_passflow(const PassFlow& flow) {
    json j = json::array();
    for (const auto& d : flow.passes) {
        json p = {{"name", d.name}};
        if (!d.params.empty()) {
            p["params"] = d.params;
        }
        j.push_back(p);
    }
    return j.dump(2);
}

}  // namespace qsc
