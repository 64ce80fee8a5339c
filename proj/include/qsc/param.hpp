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

#include <map>
#include <optional>
#include <string>

namespace qsc {

/// A gate parameter: either a literal angle or a linear symbolic
/// expression c0 + sum(ci * symbol_i). Products of two symbols are not
/// representable (and not needed by any pass).
class ParamExpr {
public:
    ParamExpr() = default;
    ParamExpr(double literal) : constant_(literal) {}  // NOLINT(google-explicit-constructor)
    static ParamExpr symbol(const std::string& name);

    [[nodiscard]] bool is_literal() const { return terms_.empty(); }
    /// Literal value; throws if symbolic.
    [[nodiscard]] double value() const;
    [[nodiscard]] std::optional<double> literal() const;

    [[nodiscard]] ParamExpr operator+(const ParamExpr& rhs) const;
    [[nodiscard]] ParamExpr operator-() const;
    [[nodiscard]] ParamExpr scaled(double factor) const;

    /// Replace bound symbols with values; unbound symbols stay symbolic.
    [[nodiscard]] ParamExpr substituted(const std::map<std::string, double>& bindings) const;

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] bool operator==(const ParamExpr& rhs) const;

    [[nodiscard]] const std::map<std::string, double>& terms() const { return terms_; }
    [[nodiscard]] double constant() const { return constant_; }

private:
    std::map<std::string, double> terms_;
    double constant_ = 0.0;
};

/// Wrap an angle into (-pi, pi].
double canonical_angle(double angle);

}  // namespace qsc
