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

#include "qsc/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

#include "qsc/gates.hpp"

namespace qsc {

namespace {

enum class TokKind { Ident, Number, Symbol, String, End };

struct Token {
    TokKind kind;
    std::string text;
    double number = 0.0;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw QasmError(message, current_.line, current_.column);
    }

private:
    void advance() {
        skip_ws();
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= src_.size()) {
            current_ = {TokKind::End, "", 0.0, line_, column_};
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            std::string text;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) != 0 ||
                    src_[pos_] == '_')) {
                text += take();
            }
            current_ = {TokKind::Ident, text, 0.0, current_.line, current_.column};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.') {
            std::string text;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0 ||
                    src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E' ||
                    ((src_[pos_] == '+' || src_[pos_] == '-') && !text.empty() &&
                     (text.back() == 'e' || text.back() == 'E')))) {
                text += take();
            }
            try {
                current_ = {TokKind::Number, text, std::stod(text), current_.line,
                            current_.column};
            } catch (const std::exception&) {
                throw QasmError("malformed number '" + text + "'", current_.line,
                                current_.column);
            }
            return;
        }
        if (c == '"') {
            take();
            std::string text;
            while (pos_ < src_.size() && src_[pos_] != '"') {
                text += take();
            }
            if (pos_ >= src_.size()) {
                throw QasmError("unterminated string", current_.line, current_.column);
            }
            take();
            current_ = {TokKind::String, text, 0.0, current_.line, current_.column};
            return;
        }
        current_ = {TokKind::Symbol, std::string(1, take()), 0.0, current_.line,
                    current_.column};
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    take();
                }
            } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                take();
            } else {
                break;
            }
        }
    }

    char take() {
        char c = src_[pos_++];
        if (c == '\n') {
            line_++;
            column_ = 1;
        } else {
            column_++;
        }
        return c;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    Circuit parse() {
        expect_ident("OPENQASM");
        Token version = lex_.next();
        if (version.kind != TokKind::Number || version.text.substr(0, 2) != "2.") {
            throw QasmError("only OpenQASM 2.0 is supported", version.line,
                            version.column);
        }
        expect_symbol(";");
        while (lex_.peek().kind != TokKind::End) {
            statement();
        }
        circuit_.validate();
        return circuit_;
    }

private:
    void statement() {
        Token t = lex_.peek();
        if (t.kind != TokKind::Ident) {
            lex_.fail("expected statement");
        }
        if (t.text == "include") {
            lex_.next();
            Token file = lex_.next();
            if (file.kind != TokKind::String) {
                throw QasmError("expected include file name", file.line, file.column);
            }
            expect_symbol(";");
            return;
        }
        if (t.text == "qreg" || t.text == "creg") {
            declare_register(t.text == "qreg");
            return;
        }
        if (t.text == "barrier") {
            lex_.next();
            Instruction in = Instruction::barrier(operand_list(true));
            expect_symbol(";");
            circuit_.instructions.push_back(in);
            return;
        }
        if (t.text == "measure") {
            lex_.next();
            auto srcs = operand(true);
            expect_symbol("-");
            expect_symbol(">");
            auto dsts = operand(false);
            expect_symbol(";");
            if (srcs.size() != dsts.size()) {
                throw QasmError("measure operand sizes differ", t.line, t.column);
            }
            for (size_t i = 0; i < srcs.size(); i++) {
                circuit_.instructions.push_back(Instruction::measure(srcs[i], dsts[i]));
            }
            return;
        }
        gate_application(lex_.next());
    }

    void declare_register(bool quantum) {
        lex_.next();
        Token name = lex_.next();
        if (name.kind != TokKind::Ident) {
            throw QasmError("expected register name", name.line, name.column);
        }
        expect_symbol("[");
        Token size = lex_.next();
        if (size.kind != TokKind::Number || size.number < 1 ||
            size.number != std::floor(size.number)) {
            throw QasmError("expected positive register size", size.line, size.column);
        }
        expect_symbol("]");
        expect_symbol(";");
        auto& regs = quantum ? circuit_.qregs : circuit_.cregs;
        auto& other = quantum ? circuit_.cregs : circuit_.qregs;
        for (const auto& r : regs) {
            if (r.name == name.text) {
                throw QasmError("register '" + name.text + "' redeclared", name.line,
                                name.column);
            }
        }
        (void)other;
        regs.push_back({name.text, static_cast<int>(size.number)});
    }

    void gate_application(const Token& name) {
        const GateInfo* info = gate_info(name.text);
        if (info == nullptr) {
            throw QasmError("unknown gate '" + name.text + "'", name.line, name.column);
        }
        std::vector<ParamExpr> params;
        if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == "(") {
            lex_.next();
            if (!(lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ")")) {
                params.push_back(expression());
                while (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ",") {
                    lex_.next();
                    params.push_back(expression());
                }
            }
            expect_symbol(")");
        }
        if (static_cast<int>(params.size()) != info->num_params) {
            throw QasmError("gate '" + name.text + "' expects " +
                                std::to_string(info->num_params) + " parameter(s)",
                            name.line, name.column);
        }
        // Each operand is either q[i] (one qubit) or a whole register
        // (broadcast). All-register operands must agree in size.
        std::vector<std::vector<int>> ops;
        ops.push_back(operand(true));
        while (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ",") {
            lex_.next();
            ops.push_back(operand(true));
        }
        expect_symbol(";");
        if (static_cast<int>(ops.size()) != info->num_qubits) {
            throw QasmError("gate '" + name.text + "' expects " +
                                std::to_string(info->num_qubits) + " qubit(s)",
                            name.line, name.column);
        }
        size_t width = 1;
        for (const auto& op : ops) {
            if (op.size() > 1) {
                if (width != 1 && op.size() != width) {
                    throw QasmError("broadcast operand sizes differ", name.line,
                                    name.column);
                }
                width = op.size();
            }
        }
        for (size_t i = 0; i < width; i++) {
            std::vector<int> qubits;
            for (const auto& op : ops) {
                qubits.push_back(op.size() == 1 ? op[0] : op[i]);
            }
            circuit_.instructions.push_back(
                Instruction::gate(name.text, qubits, params));
        }
    }

    /// A register reference, optionally indexed. Returns flat indices.
    std::vector<int> operand(bool quantum) {
        Token name = lex_.next();
        if (name.kind != TokKind::Ident) {
            throw QasmError("expected register name", name.line, name.column);
        }
        const auto& regs = quantum ? circuit_.qregs : circuit_.cregs;
        int base = 0;
        const Register* reg = nullptr;
        for (const auto& r : regs) {
            if (r.name == name.text) {
                reg = &r;
                break;
            }
            base += r.size;
        }
        if (reg == nullptr) {
            throw QasmError("undeclared register '" + name.text + "'", name.line,
                            name.column);
        }
        if (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == "[") {
            lex_.next();
            Token idx = lex_.next();
            if (idx.kind != TokKind::Number || idx.number != std::floor(idx.number)) {
                throw QasmError("expected index", idx.line, idx.column);
            }
            expect_symbol("]");
            int i = static_cast<int>(idx.number);
            if (i < 0 || i >= reg->size) {
                throw QasmError("index " + std::to_string(i) + " out of range for '" +
                                    name.text + "[" + std::to_string(reg->size) + "]'",
                                idx.line, idx.column);
            }
            return {base + i};
        }
        std::vector<int> all(reg->size);
        for (int i = 0; i < reg->size; i++) {
            all[i] = base + i;
        }
        return all;
    }

    std::vector<int> operand_list(bool quantum) {
        std::vector<int> out = operand(quantum);
        while (lex_.peek().kind == TokKind::Symbol && lex_.peek().text == ",") {
            lex_.next();
            auto more = operand(quantum);
            out.insert(out.end(), more.begin(), more.end());
        }
        return out;
    }

    // Expression grammar: term (("+"|"-") term)*; term: factor (("*"|"/")
    // factor)*; factor: ["-"] (number | pi | identifier | "(" expr ")").
    ParamExpr expression() {
        ParamExpr e = term();
        while (lex_.peek().kind == TokKind::Symbol &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            std::string op = lex_.next().text;
            ParamExpr rhs = term();
            e = op == "+" ? e + rhs : e + (-rhs);
        }
        return e;
    }

    ParamExpr term() {
        ParamExpr e = factor();
        while (lex_.peek().kind == TokKind::Symbol &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            Token op = lex_.next();
            ParamExpr rhs = factor();
            if (op.text == "*") {
                if (auto v = rhs.literal()) {
                    e = e.scaled(*v);
                } else if (auto u = e.literal()) {
                    e = rhs.scaled(*u);
                } else {
                    throw QasmError("nonlinear parameter expression", op.line,
                                    op.column);
                }
            } else {
                auto v = rhs.literal();
                if (!v || *v == 0.0) {
                    throw QasmError("division by a symbol or zero", op.line, op.column);
                }
                e = e.scaled(1.0 / *v);
            }
        }
        return e;
    }

    ParamExpr factor() {
        Token t = lex_.next();
        if (t.kind == TokKind::Symbol && t.text == "-") {
            return -factor();
        }
        if (t.kind == TokKind::Symbol && t.text == "(") {
            ParamExpr e = expression();
            expect_symbol(")");
            return e;
        }
        if (t.kind == TokKind::Number) {
            return {t.number};
        }
        if (t.kind == TokKind::Ident) {
            if (t.text == "pi") {
                return {std::numbers::pi};
            }
            return ParamExpr::symbol(t.text);
        }
        throw QasmError("expected parameter expression", t.line, t.column);
    }

    void expect_ident(const std::string& text) {
        Token t = lex_.next();
        if (t.kind != TokKind::Ident || t.text != text) {
            throw QasmError("expected '" + text + "'", t.line, t.column);
        }
    }

    void expect_symbol(const std::string& text) {
        Token t = lex_.next();
        if (t.kind != TokKind::Symbol || t.text != text) {
            throw QasmError("expected '" + text + "'", t.line, t.column);
        }
    }

    Lexer lex_;
    Circuit circuit_;
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Flat index -> "name[i]".
std::string ref_name(const std::vector<Register>& regs, int index) {
    for (const auto& r : regs) {
        if (index < r.size) {
            return r.name + "[" + std::to_string(index) + "]";
        }
        index -= r.size;
    }
    return "?[" + std::to_string(index) + "]";
}

}  // namespace

Circuit parse_qasm(const std::string& text) { return Parser(text).parse(); }

std::string emit_qasm(const Circuit& circuit, const EmitOptions& options) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    for (const auto& r : circuit.qregs) {
        out << "qreg " << r.name << "[" << r.size << "];\n";
    }
    for (const auto& r : circuit.cregs) {
        out << "creg " << r.name << "[" << r.size << "];\n";
    }
    for (const auto& in : circuit.instructions) {
        if (in.kind == InstrKind::Measure) {
            out << "measure " << ref_name(circuit.qregs, in.qubits[0]) << " -> "
                << ref_name(circuit.cregs, in.clbits[0]) << ";\n";
            continue;
        }
        out << in.name;
        if (!in.params.empty()) {
            out << "(";
            for (size_t i = 0; i < in.params.size(); i++) {
                const ParamExpr& p = in.params[i];
                if (!p.is_literal() && !options.allow_symbolic) {
                    throw std::runtime_error("unbound parameter in emission: " +
                                             p.to_string());
                }
                out << (i > 0 ? "," : "")
                    << (p.is_literal() ? format_double(p.value()) : p.to_string());
            }
            out << ")";
        }
        out << " ";
        for (size_t i = 0; i < in.qubits.size(); i++) {
            out << (i > 0 ? "," : "") << ref_name(circuit.qregs, in.qubits[i]);
        }
        out << ";\n";
    }
    return out.str();
}

}  // namespace qsc
