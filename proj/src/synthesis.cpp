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

#include "qsc/synthesis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qsc {

namespace {

using namespace std::complex_literals;
using cd = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi / 2;
constexpr double kPi4 = kPi / 4;
constexpr double kTau = 2 * kPi;

double mod_pos(double x, double m) {
    double r = std::fmod(x, m);
    return r < 0 ? r + m : r;
}

Matrix2 ipx() {
    Matrix2 m;
    m << 0, 1i, 1i, 0;
    return m;
}

Matrix2 ipy() {
    Matrix2 m;
    m << 0, 1, -1, 0;
    return m;
}

Matrix2 ipz() {
    Matrix2 m;
    m << 1i, 0, 0, -1i;
    return m;
}

/// CNOT with control = operand 0 (LSB).
Matrix4 cx01() {
    Matrix4 m = Matrix4::Zero();
    m(0, 0) = m(2, 2) = 1.0;
    m(1, 3) = m(3, 1) = 1.0;
    return m;
}

/// Unnormalized magic-basis matrix; its unitary inverse is adjoint()/2.
Matrix4 magic_b() {
    Matrix4 b;
    b << 1, 1i, 0, 0,  //
        0, 0, 1i, 1,   //
        0, 0, 1i, -1,  //
        1, -1i, 0, 0;
    return b;
}

Matrix4 magic_out(const Matrix4& u) {
    static const Matrix4 b = magic_b();
    static const Matrix4 bdag = b.adjoint() / 2;
    return bdag * u * b;
}

Matrix4 magic_in(const Matrix4& u) {
    static const Matrix4 b = magic_b();
    static const Matrix4 bdag = b.adjoint() / 2;
    return b * u * bdag;
}

/// Diagonalize a complex symmetric unitary m as p diag(d) p^T with p
/// real orthogonal, via a random real linear combination of its real
/// and imaginary parts (both symmetric, commuting generically).
void diagonalize_complex_symmetric(const Matrix4& m, Eigen::Matrix4d& p,
                                   Eigen::Vector4cd& d) {
    std::mt19937 rng(2023);
    std::normal_distribution<double> normal;
    for (int attempt = 0; attempt < 100; attempt++) {
        const double ra = normal(rng);
        const double rb = normal(rng);
        Eigen::Matrix4d m2 = ra * m.real() + rb * m.imag();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(m2);
        p = es.eigenvectors();
        d = (p.transpose() * m.real() * p).diagonal().cast<cd>() +
            1i * (p.transpose() * m.imag() * p).diagonal().cast<cd>();
        Matrix4 recon = p.cast<cd>() * d.asDiagonal() * p.transpose().cast<cd>();
        if ((recon - m).cwiseAbs().maxCoeff() < 1e-11) {
            return;
        }
    }
    throw std::runtime_error("failed to diagonalize interaction matrix");
}

/// Split a special-unitary kron product k = (l ⊗ r) into special
/// unitaries l, r and the residual phase.
void decompose_product(const Matrix4& k, Matrix2& l, Matrix2& r, double& phase) {
    r = k.block<2, 2>(0, 0);
    if (std::abs(r.determinant()) < 0.1) {
        r = k.block<2, 2>(2, 0);
    }
    const cd detr = r.determinant();
    if (std::abs(detr) < 0.1) {
        throw std::runtime_error("kron factor extraction failed");
    }
    r /= std::sqrt(detr);
    Matrix4 eye_r = Matrix4::Zero();
    const Matrix2 rdag = r.adjoint();
    eye_r.block<2, 2>(0, 0) = rdag;
    eye_r.block<2, 2>(2, 2) = rdag;
    const Matrix4 temp = k * eye_r;
    l << temp(0, 0), temp(0, 2), temp(2, 0), temp(2, 2);
    const cd detl = l.determinant();
    if (std::abs(detl) < 0.9) {
        throw std::runtime_error("kron factor extraction failed");
    }
    l /= std::sqrt(detl);
    phase = std::arg(detl) / 2;
}

Matrix4 kron2(const Matrix2& msb, const Matrix2& lsb) {
    Matrix4 out;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            out.block<2, 2>(2 * i, 2 * j) = msb(i, j) * lsb;
        }
    }
    return out;
}

/// Fixed CNOT-basis interleaving matrices and the CNOT's own Weyl data,
/// computed once.
struct BasisData {
    WeylDecomposition cx;
    Matrix2 u0l, u0r, u1l, u1ra, u1rb, u2la, u2lb, u2ra, u2rb, u3l, u3r;
    Matrix2 q0l, q0r, q1la, q1lb, q1ra, q1rb, q2l, q2r;
};

const BasisData& basis_data() {
    static const BasisData data = [] {
        BasisData bd;
        bd.cx = weyl_decompose(cx01());
        const double bb = bd.cx.b;
        const double f2 = 1.0 / std::numbers::sqrt2;
        const cd eb = std::exp(1i * bb);
        const cd ebm = std::exp(-1i * bb);

        Matrix2 k12r;
        k12r << f2 * 1i, f2, -f2, -f2 * 1i;
        Matrix2 k12l;
        k12l << 0.5 + 0.5i, 0.5 + 0.5i, -0.5 + 0.5i, 0.5 - 0.5i;
        Matrix2 k11l;
        k11l << -1i * ebm, ebm, -1i * eb, -eb;
        k11l *= (0.5 - 0.5i);
        Matrix2 k11r;
        k11r << 1i * ebm, -ebm, eb, -1i * eb;
        k11r *= f2;
        Matrix2 k32l_k21l;
        k32l_k21l << 1.0 + 1i * std::cos(2 * bb), 1i * std::sin(2 * bb),
            1i * std::sin(2 * bb), 1.0 - 1i * std::cos(2 * bb);
        k32l_k21l *= f2;
        Matrix2 k21r;
        k21r << -1i * std::exp(-2i * bb), std::exp(-2i * bb),
            1i * std::exp(2i * bb), std::exp(2i * bb);
        k21r *= (0.5 + 0.5i);
        Matrix2 k22l;
        k22l << 1, -1, 1, 1;
        k22l *= f2;
        Matrix2 k22r;
        k22r << 0, 1, -1, 0;
        Matrix2 k31l;
        k31l << ebm, ebm, -eb, eb;
        k31l *= f2;
        Matrix2 k31r;
        k31r << 1i * eb, 0, 0, -1i * ebm;
        Matrix2 k32r;
        k32r << eb, -ebm, -1i * eb, -1i * ebm;
        k32r *= (0.5 + 0.5i);

        const Matrix2 k1ld = bd.cx.k1l.adjoint();
        const Matrix2 k1rd = bd.cx.k1r.adjoint();
        const Matrix2 k2ld = bd.cx.k2l.adjoint();
        const Matrix2 k2rd = bd.cx.k2r.adjoint();

        bd.u0l = k31l * k1ld;
        bd.u0r = k31r * k1rd;
        bd.u1l = k2ld * k32l_k21l * k1ld;
        bd.u1ra = k2rd * k32r;
        bd.u1rb = k21r * k1rd;
        bd.u2la = k2ld * k22l;
        bd.u2lb = k11l * k1ld;
        bd.u2ra = k2rd * k22r;
        bd.u2rb = k11r * k1rd;
        bd.u3l = k2ld * k12l;
        bd.u3r = k2rd * k12r;
        bd.q0l = k12l.adjoint() * k1ld;
        bd.q0r = k12r.adjoint() * ipz() * k1rd;
        bd.q1la = k2ld * k11l.adjoint();
        bd.q1lb = k11l * k1ld;
        bd.q1ra = k2rd * ipz() * k11r.adjoint();
        bd.q1rb = k11r * k1rd;
        bd.q2l = k2ld * k12l;
        bd.q2r = k2rd * k12r;
        return bd;
    }();
    return data;
}

/// Local factors interleaving n CNOTs: mats[2i] acts on operand 0,
/// mats[2i+1] on operand 1, CNOT after each of the first n pairs.
std::vector<Matrix2> decomp_mats(const WeylDecomposition& t, int n) {
    const BasisData& bd = basis_data();
    switch (n) {
        case 0:
            return {t.k1r * t.k2r, t.k1l * t.k2l};
        case 1:
            return {bd.cx.k2r.adjoint() * t.k2r, bd.cx.k2l.adjoint() * t.k2l,
                    t.k1r * bd.cx.k1r.adjoint(), t.k1l * bd.cx.k1l.adjoint()};
        case 2:
            return {bd.q2r * t.k2r,
                    bd.q2l * t.k2l,
                    bd.q1ra * rz_matrix(2 * t.b) * bd.q1rb,
                    bd.q1la * rz_matrix(-2 * t.a) * bd.q1lb,
                    t.k1r * bd.q0r,
                    t.k1l * bd.q0l};
        default:
            return {bd.u3r * t.k2r,
                    bd.u3l * t.k2l,
                    bd.u2ra * rz_matrix(2 * t.b) * bd.u2rb,
                    bd.u2la * rz_matrix(-2 * t.a) * bd.u2lb,
                    bd.u1ra * rz_matrix(-2 * t.c) * bd.u1rb,
                    bd.u1l,
                    t.k1r * bd.u0r,
                    t.k1l * bd.u0l};
    }
}

void append_rotation(std::vector<Instruction>& out, const std::string& name,
                     double angle, int q) {
    angle = canonical_angle(angle);
    if (std::abs(angle) > 1e-10) {
        out.push_back(Instruction::gate(name, {q}, {ParamExpr(angle)}));
    }
}

}  // namespace

ZyzAngles zyz_decompose(const Matrix2& u) {
    ZyzAngles out;
    const cd det = u.determinant();
    out.phase = std::arg(det) / 2;
    const Matrix2 su = u / std::sqrt(det);
    const double c = std::abs(su(0, 0));
    const double s = std::abs(su(1, 0));
    out.theta = 2 * std::atan2(s, c);
    if (s < 1e-12) {
        out.phi = 2 * std::arg(su(1, 1));
        out.lambda = 0.0;
    } else if (c < 1e-12) {
        out.phi = 2 * std::arg(su(1, 0));
        out.lambda = 0.0;
    } else {
        const double sum = std::arg(su(1, 1));
        const double diff = std::arg(su(1, 0));
        out.phi = sum + diff;
        out.lambda = sum - diff;
    }
    return out;
}

int WeylDecomposition::num_basis_gates(double tol) const {
    if (std::abs(a) < tol && std::abs(b) < tol && std::abs(c) < tol) {
        return 0;
    }
    if (std::abs(a - kPi4) < tol && std::abs(b) < tol && std::abs(c) < tol) {
        return 1;
    }
    if (std::abs(c) < tol) {
        return 2;
    }
    return 3;
}

WeylDecomposition weyl_decompose(const Matrix4& u_in) {
    const cd detu = u_in.determinant();
    const Matrix4 u = u_in * std::pow(detu, cd(-0.25));
    double gphase = std::arg(detu) / 4;

    const Matrix4 up = magic_out(u);
    const Matrix4 m2 = up.transpose() * up;
    Eigen::Matrix4d p_real;
    Eigen::Vector4cd d;
    diagonalize_complex_symmetric(m2, p_real, d);

    Eigen::Vector4d dre;
    for (int i = 0; i < 3; i++) {
        dre[i] = -std::arg(d[i]) / 2;
    }
    dre[3] = -dre[0] - dre[1] - dre[2];
    std::array<double, 3> cs{};
    for (int i = 0; i < 3; i++) {
        cs[i] = mod_pos((dre[i] + dre[3]) / 2, kTau);
    }
    // Order coordinates by distance to the nearest multiple of pi/2,
    // then rotate so the two nonzero-like ones come first.
    std::array<double, 3> cstemp{};
    for (int i = 0; i < 3; i++) {
        const double m = mod_pos(cs[i], kPi2);
        cstemp[i] = std::min(m, kPi2 - m);
    }
    std::array<int, 3> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&cstemp](int x, int y) { return cstemp[x] < cstemp[y]; });
    order = {order[1], order[2], order[0]};
    std::array<double, 3> cs2{};
    Eigen::Vector4d dre2 = dre;
    Eigen::Matrix4d p2 = p_real;
    for (int i = 0; i < 3; i++) {
        cs2[i] = cs[order[i]];
        dre2[i] = dre[order[i]];
        p2.col(i) = p_real.col(order[i]);
    }
    cs = cs2;
    dre = dre2;
    p_real = p2;
    if (p_real.determinant() < 0) {
        p_real.col(3) *= -1;
    }
    const Matrix4 p = p_real.cast<cd>();

    Eigen::Vector4cd dd;
    for (int i = 0; i < 4; i++) {
        dd[i] = std::exp(1i * dre[i]);
    }
    Matrix4 k1 = magic_in(up * p * dd.asDiagonal());
    Matrix4 k2 = magic_in(p.adjoint());

    WeylDecomposition t;
    double ph1 = 0.0;
    double ph2 = 0.0;
    decompose_product(k1, t.k1l, t.k1r, ph1);
    decompose_product(k2, t.k2l, t.k2r, ph2);
    gphase += ph1 + ph2;

    // Flip into the Weyl chamber pi/4 >= a >= b >= |c|.
    if (cs[0] > kPi2) {
        cs[0] -= 3 * kPi2;
        t.k1l = t.k1l * ipy();
        t.k1r = t.k1r * ipy();
        gphase += kPi2;
    }
    if (cs[1] > kPi2) {
        cs[1] -= 3 * kPi2;
        t.k1l = t.k1l * ipx();
        t.k1r = t.k1r * ipx();
        gphase += kPi2;
    }
    int conjs = 0;
    if (cs[0] > kPi4) {
        cs[0] = kPi2 - cs[0];
        t.k1l = t.k1l * ipy();
        t.k2r = ipy() * t.k2r;
        conjs++;
        gphase -= kPi2;
    }
    if (cs[1] > kPi4) {
        cs[1] = kPi2 - cs[1];
        t.k1l = t.k1l * ipx();
        t.k2r = ipx() * t.k2r;
        conjs++;
        gphase += kPi2;
        if (conjs == 1) {
            gphase -= kPi;
        }
    }
    if (cs[2] > kPi2) {
        cs[2] -= 3 * kPi2;
        t.k1l = t.k1l * ipz();
        t.k1r = t.k1r * ipz();
        gphase += kPi2;
        if (conjs == 1) {
            gphase -= kPi;
        }
    }
    if (conjs == 1) {
        cs[2] = kPi2 - cs[2];
        t.k1l = t.k1l * ipz();
        t.k2r = ipz() * t.k2r;
        gphase += kPi2;
    }
    if (cs[2] > kPi4) {
        cs[2] -= kPi2;
        t.k1l = t.k1l * ipz();
        t.k1r = t.k1r * ipz();
        gphase -= kPi2;
    }
    t.a = cs[1];
    t.b = cs[0];
    t.c = cs[2];
    t.phase = gphase;
    return t;
}

std::vector<Instruction> synthesize_one_qubit(const Matrix2& u, int q) {
    const ZyzAngles zyz = zyz_decompose(u);
    std::vector<Instruction> out;
    append_rotation(out, "rz", zyz.lambda, q);
    append_rotation(out, "ry", zyz.theta, q);
    append_rotation(out, "rz", zyz.phi, q);
    return out;
}

std::vector<Instruction> synthesize_two_qubit(const Matrix4& u, int q0, int q1) {
    const WeylDecomposition t = weyl_decompose(u);
    const int n = t.num_basis_gates();
    const std::vector<Matrix2> mats = decomp_mats(t, n);
    std::vector<Instruction> out;
    for (int i = 0; i <= n; i++) {
        for (const auto& in : synthesize_one_qubit(mats[2 * i], q0)) {
            out.push_back(in);
        }
        for (const auto& in : synthesize_one_qubit(mats[2 * i + 1], q1)) {
            out.push_back(in);
        }
        if (i < n) {
            out.push_back(Instruction::gate("cx", {q0, q1}));
        }
    }
    return out;
}

}  // namespace qsc
