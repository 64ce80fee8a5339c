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

#include "qsc/param.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace qsc {

ParamExpr ParamExpr::symbol(const std::string& name) {
    ParamExpr e;
    e.terms_[name] = 1.0;
    return e;
}

double ParamExpr::value() const {
    if (!terms_.empty()) {
        throw std::runtime_error("unbound parameter: " + to_string());
    }
    return constant_;
}

std::optional<double> ParamExpr::literal() const {
    if (terms_.empty()) {
        return constant_;
    }
    return std::nullopt;
}

ParamExpr ParamExpr::operator+(const ParamExpr& rhs) const {
    ParamExpr out = *this;
    out.constant_ += rhs.constant_;
    for (const auto& [name, coeff] : rhs.terms_) {
        out.terms_[name] += coeff;
        if (out.terms_[name] == 0.0) {
            out.terms_.erase(name);
        }
    }
    return out;
}

ParamExpr ParamExpr::operator-() const { return scaled(-1.0); }

ParamExpr ParamExpr::scaled(double factor) const {
    ParamExpr out;
    out.constant_ = constant_ * factor;
    if (factor != 0.0) {
        for (const auto& [name, coeff] : terms_) {
            out.terms_[name] = coeff * factor;
        }
    }
    return out;
}

ParamExpr ParamExpr::substituted(const std::map<std::string, double>& bindings) const {
    ParamExpr out;
    out.constant_ = constant_;
    for (const auto& [name, coeff] : terms_) {
        auto it = bindings.find(name);
        if (it != bindings.end()) {
            out.constant_ += coeff * it->second;
        } else {
            out.terms_[name] = coeff;
        }
    }
    return out;
}

std::string ParamExpr::to_string() const {
    char buf[64];
    std::string out;
    if (terms_.empty() || constant_ != 0.0) {
        std::snprintf(buf, sizeof(buf), "%.17g", constant_);
        out = buf;
    }
    for (const auto& [name, coeff] : terms_) {
        if (coeff == 1.0) {
            out += out.empty() ? name : "+" + name;
        } else {
            std::snprintf(buf, sizeof(buf), "%.17g", coeff);
            std::string c = buf;
            if (!out.empty() && coeff > 0) {
                out += "+";
            }
            out += c + "*" + name;
        }
    }
    return out;
}

bool ParamExpr::operator==(const ParamExpr& rhs) const {
    return constant_ == rhs.constant_ && terms_ == rhs.terms_;
}

double canonical_angle(double angle) {
    constexpr double tau = 2.0 * std::numbers::pi;
    double a = std::fmod(angle, tau);
    if (a > std::numbers::pi) {
        a -= tau;
    } else if (a <= -std::numbers::pi) {
        a += tau;
    }
    return a;
}

}  // namespace qsc
