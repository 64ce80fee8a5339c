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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsc/backend.hpp"
#include "qsc/circuit.hpp"

namespace qsc {

/// A pass invocation: registry name plus string-typed parameters.
struct PassDescriptor {
    std::string name;
    std::map<std::string, std::string> params;
    bool operator==(const PassDescriptor&) const = default;
};

struct PassFlow {
    std::vector<PassDescriptor> passes;
    bool operator==(const PassFlow&) const = default;
};

struct PassReportEntry {
    std::string name;
    double seconds = 0.0;
    std::map<int, int> pre_gate_counts;
    std::map<int, int> post_gate_counts;
    int pre_depth = 0;
    int post_depth = 0;
};

struct PassReport {
    std::vector<PassReportEntry> entries;
    std::string initial_layout_summary;
    std::string final_layout_summary;
};

using PassFn =
    std::function<Circuit(const Circuit&, Model&,
                          const std::map<std::string, std::string>&)>;

/// Registered pass names: unroll_to_2q, unroll_to_basis, sabre_layout,
/// sabre_route, cancel_inverses, fuse_1q, substitute_params.
const std::map<std::string, PassFn>& pass_registry();

/// Run each pass in order against the shared model; errors are
/// rethrown with the failing pass's name.
std::pair<Circuit, PassReport> run_passflow(const Circuit& circuit,
                                            const PassFlow& flow, Model& model);

/// Preset levels 0-3. 0 = basis unrolling only; 1 adds H_D routing with
/// a random initial layout; 2 = H_M routing, degree layout, and gate
/// cancellation/fusion; 3 = level 2 with 3 reverse-traversal layout
/// iterations and the weight strategy.
PassFlow preset_passflow(int level);

/// "text" table or "json" document; deterministic.
std::string render_report(const PassReport& report, const std::string& format);

/// PassFlow serialization for the CLI: JSON
/// [{"name": ..., "params": {...}}, ...].
PassFlow parse_passflow(const std::string& json_text);
std::string serialize_passflow(const PassFlow& flow);

}  // namespace qsc
