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

#include "qsc/gates.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qsc {

namespace {

using namespace std::complex_literals;
using cd = std::complex<double>;

const std::map<std::string, GateInfo>& table() {
    static const std::map<std::string, GateInfo> t = [] {
        std::map<std::string, GateInfo> m;
        auto add = [&m](const std::string& name, int nq, int np, bool self_inv = false,
                        const std::string& inv = "") {
            m[name] = GateInfo{name, nq, np, self_inv, inv};
        };
        add("id", 1, 0, true);
        add("x", 1, 0, true);
        add("y", 1, 0, true);
        add("z", 1, 0, true);
        add("h", 1, 0, true);
        add("s", 1, 0, false, "sdg");
        add("sdg", 1, 0, false, "s");
        add("t", 1, 0, false, "tdg");
        add("tdg", 1, 0, false, "t");
        add("rx", 1, 1);
        add("ry", 1, 1);
        add("rz", 1, 1);
        add("u1", 1, 1);
        add("u2", 1, 2);
        add("u3", 1, 3);
        add("cx", 2, 0, true);
        add("cz", 2, 0, true);
        add("cy", 2, 0, true);
        add("ch", 2, 0, true);
        add("swap", 2, 0, true);
        add("ccx", 3, 0, true);
        add("cswap", 3, 0, true);
        add("rxx", 2, 1);
        add("ryy", 2, 1);
        add("rzz", 2, 1);
        add("crx", 2, 1);
        add("cry", 2, 1);
        add("crz", 2, 1);
        add("cp", 2, 1);
        return m;
    }();
    return t;
}

Matrix2 u3_matrix(double theta, double phi, double lambda) {
    Matrix2 m;
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    m << c, -std::exp(1i * lambda) * s, std::exp(1i * phi) * s,
        std::exp(1i * (phi + lambda)) * c;
    return m;
}

/// Controlled version of a 1q gate: operand 0 = control (LSB),
/// operand 1 = target.
Matrix4 controlled(const Matrix2& u) {
    Matrix4 m = Matrix4::Identity();
    // states |q1 q0>: control set in columns 1 (01) and 3 (11)
    m(1, 1) = u(0, 0);
    m(1, 3) = u(0, 1);
    m(3, 1) = u(1, 0);
    m(3, 3) = u(1, 1);
    return m;
}

Matrix4 two_axis_rotation(double theta, int axis) {
    // axis 0 = XX, 1 = YY, 2 = ZZ; exp(-i theta/2 P)
    Matrix4 p = Matrix4::Zero();
    if (axis == 0) {
        p(0, 3) = p(1, 2) = p(2, 1) = p(3, 0) = 1.0;
    } else if (axis == 1) {
        p(0, 3) = p(3, 0) = -1.0;
        p(1, 2) = p(2, 1) = 1.0;
    } else {
        p.diagonal() << 1.0, -1.0, -1.0, 1.0;
    }
    return std::cos(theta / 2) * Matrix4::Identity() -
           1i * std::sin(theta / 2) * p;
}

}  // namespace

const GateInfo* gate_info(const std::string& name) {
    const auto& t = table();
    auto it = t.find(name);
    return it == t.end() ? nullptr : &it->second;
}

const std::vector<std::string>& gate_vocabulary() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, info] : table()) {
            v.push_back(name);
        }
        return v;
    }();
    return names;
}

Matrix2 rx_matrix(double theta) {
    Matrix2 m;
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    m << c, -1i * s, -1i * s, c;
    return m;
}

Matrix2 ry_matrix(double theta) {
    Matrix2 m;
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    m << c, -s, s, c;
    return m;
}

Matrix2 rz_matrix(double theta) {
    Matrix2 m;
    m << std::exp(-0.5i * theta), 0, 0, std::exp(0.5i * theta);
    return m;
}

MatrixX gate_matrix(const std::string& name, const std::vector<double>& params) {
    const GateInfo* info = gate_info(name);
    if (info == nullptr) {
        throw std::runtime_error("unknown gate: " + name);
    }
    if (static_cast<int>(params.size()) != info->num_params) {
        throw std::runtime_error("gate " + name + " expects " +
                                 std::to_string(info->num_params) + " parameter(s)");
    }
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    if (name == "id") {
        return Matrix2::Identity();
    }
    if (name == "x") {
        Matrix2 m;
        m << 0, 1, 1, 0;
        return m;
    }
    if (name == "y") {
        Matrix2 m;
        m << 0, -1i, 1i, 0;
        return m;
    }
    if (name == "z") {
        Matrix2 m;
        m << 1, 0, 0, -1;
        return m;
    }
    if (name == "h") {
        Matrix2 m;
        m << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
        return m;
    }
    if (name == "s") {
        Matrix2 m;
        m << 1, 0, 0, 1i;
        return m;
    }
    if (name == "sdg") {
        Matrix2 m;
        m << 1, 0, 0, -1i;
        return m;
    }
    if (name == "t") {
        Matrix2 m;
        m << 1, 0, 0, std::exp(0.25i * std::numbers::pi);
        return m;
    }
    if (name == "tdg") {
        Matrix2 m;
        m << 1, 0, 0, std::exp(-0.25i * std::numbers::pi);
        return m;
    }
    if (name == "rx") {
        return rx_matrix(params[0]);
    }
    if (name == "ry") {
        return ry_matrix(params[0]);
    }
    if (name == "rz") {
        return rz_matrix(params[0]);
    }
    if (name == "u1") {
        Matrix2 m;
        m << 1, 0, 0, std::exp(1i * params[0]);
        return m;
    }
    if (name == "u2") {
        return u3_matrix(std::numbers::pi / 2, params[0], params[1]);
    }
    if (name == "u3") {
        return u3_matrix(params[0], params[1], params[2]);
    }
    if (name == "cx") {
        return controlled(gate_matrix("x", {}));
    }
    if (name == "cz") {
        return controlled(gate_matrix("z", {}));
    }
    if (name == "cy") {
        return controlled(gate_matrix("y", {}));
    }
    if (name == "ch") {
        return controlled(gate_matrix("h", {}));
    }
    if (name == "swap") {
        Matrix4 m = Matrix4::Zero();
        m(0, 0) = m(3, 3) = 1.0;
        m(1, 2) = m(2, 1) = 1.0;
        return m;
    }
    if (name == "rxx") {
        return two_axis_rotation(params[0], 0);
    }
    if (name == "ryy") {
        return two_axis_rotation(params[0], 1);
    }
    if (name == "rzz") {
        return two_axis_rotation(params[0], 2);
    }
    if (name == "crx") {
        return controlled(rx_matrix(params[0]));
    }
    if (name == "cry") {
        return controlled(ry_matrix(params[0]));
    }
    if (name == "crz") {
        return controlled(rz_matrix(params[0]));
    }
    if (name == "cp") {
        Matrix2 p;
        p << 1, 0, 0, std::exp(1i * params[0]);
        return controlled(p);
    }
    if (name == "ccx") {
        MatrixX m = MatrixX::Identity(8, 8);
        // operands (c1, c2, t): both controls set -> flip target (bit 2)
        m(3, 3) = m(7, 7) = 0.0;
        m(3, 7) = m(7, 3) = 1.0;
        return m;
    }
    if (name == "cswap") {
        MatrixX m = MatrixX::Identity(8, 8);
        // operands (c, a, b): control (bit 0) set -> swap bits 1 and 2
        m(3, 3) = m(5, 5) = 0.0;
        m(3, 5) = m(5, 3) = 1.0;
        return m;
    }
    throw std::runtime_error("no matrix for gate: " + name);
}

}  // namespace qsc
