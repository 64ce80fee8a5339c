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

#include <stdexcept>
#include <string>

#include "qsc/circuit.hpp"

namespace qsc {

class QasmError : public std::runtime_error {
public:
    QasmError(const std::string& message, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                             ": " + message),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// Parse OpenQASM 2.0 source using the built-in gate vocabulary.
/// `include "qelib1.inc"` is accepted and ignored. Bare identifiers in
/// parameter position become symbolic parameters.
Circuit parse_qasm(const std::string& text);

struct EmitOptions {
    /// Allow symbolic parameters in the output (non-standard QASM).
    bool allow_symbolic = false;
};

/// Canonical OpenQASM 2.0 text: header, qregs, cregs, then one
/// instruction per line in IR order.
std::string emit_qasm(const Circuit& circuit, const EmitOptions& options = {});

}  // namespace qsc
