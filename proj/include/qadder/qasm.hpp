// Copyright 2026 The qadder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qadder/circuit.hpp"

namespace qadder {

struct QasmParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Registers follow the fixed layout a, b, anc when the roles tile the index
// space in that order; otherwise everything lands in a single register q.
struct RegisterPlan {
    std::vector<std::pair<std::string, int>> regs;  // name, width

    static RegisterPlan plan(const Circuit& c) {
        const Roles& r = c.roles();
        auto contiguous_from = [](const std::vector<int>& qs, int start) {
            for (std::size_t i = 0; i < qs.size(); ++i)
                if (qs[i] != start + static_cast<int>(i)) return false;
            return true;
        };
        RegisterPlan p;
        const int na = static_cast<int>(r.a.size());
        const int nb = static_cast<int>(r.b.size());
        if (na > 0 && nb > 0 && contiguous_from(r.a, 0) && contiguous_from(r.b, na)) {
            p.regs.push_back({"a", na});
            p.regs.push_back({"b", nb});
            if (c.num_qubits() > na + nb)
                p.regs.push_back({"anc", c.num_qubits() - na - nb});
        } else {
            p.regs.push_back({"q", c.num_qubits()});
        }
        return p;
    }

    std::string ref(int qubit) const {
        int base = 0;
        for (const auto& [name, width] : regs) {
            if (qubit < base + width)
                return name + "[" + std::to_string(qubit - base) + "]";
            base += width;
        }
        throw std::out_of_range("qubit outside register plan");
    }
};

inline void emit_role_comment(std::ostringstream& out, const char* name,
                              const std::vector<int>& qs) {
    if (qs.empty()) return;
    out << "// qadder-role " << name << ":";
    for (int q : qs) out << ' ' << q;
    out << '\n';
}

}  // namespace detail

/// OPENQASM 2.0 text. Role assignments ride along as structured comments so
/// that import restores them; gate lines use the qelib1 names.
inline std::string export_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    detail::emit_role_comment(out, "a", c.roles().a);
    detail::emit_role_comment(out, "b", c.roles().b);
    detail::emit_role_comment(out, "cin", c.roles().cin);
    detail::emit_role_comment(out, "ancilla", c.roles().ancilla);
    detail::emit_role_comment(out, "sum", c.roles().sum);
    detail::emit_role_comment(out, "cout", c.roles().cout);
    const detail::RegisterPlan plan = detail::RegisterPlan::plan(c);
    for (const auto& [name, width] : plan.regs)
        out << "qreg " << name << "[" << width << "];\n";
    for (const GateOp& g : c.gates()) {
        out << gate_name(g.kind) << ' ';
        for (int i = 0; i < g.arity(); ++i) {
            if (i) out << ',';
            out << plan.ref(g.qubits[i]);
        }
        out << ";\n";
    }
    return out.str();
}

/// Parses the subset emitted by export_qasm: version line, one include,
/// qreg declarations, role comments, and x/cx/ccx/h/t/tdg statements.
inline Circuit import_qasm(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    std::map<std::string, int> reg_base;
    int total_qubits = 0;
    Roles roles;
    struct PendingGate {
        std::string kind;
        std::vector<std::pair<std::string, int>> operands;
        int lineno;
    };
    std::vector<PendingGate> pending;
    bool saw_version = false;

    auto fail = [&](const std::string& msg) -> void {
        throw QasmParseError("qasm line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        std::string s = line.substr(begin, end - begin + 1);

        if (s.rfind("// qadder-role ", 0) == 0) {
            std::istringstream fields(s.substr(15));
            std::string name;
            fields >> name;
            if (name.empty() || name.back() != ':') fail("malformed role comment");
            name.pop_back();
            std::vector<int>* target = nullptr;
            if (name == "a") target = &roles.a;
            else if (name == "b") target = &roles.b;
            else if (name == "cin") target = &roles.cin;
            else if (name == "ancilla") target = &roles.ancilla;
            else if (name == "sum") target = &roles.sum;
            else if (name == "cout") target = &roles.cout;
            else fail("unknown role name: " + name);
            int q;
            while (fields >> q) target->push_back(q);
            continue;
        }
        if (s.rfind("//", 0) == 0) continue;
        if (s.rfind("OPENQASM", 0) == 0) {
            if (s.find("2.0") == std::string::npos) fail("only OPENQASM 2.0 is supported");
            saw_version = true;
            continue;
        }
        if (s.rfind("include", 0) == 0) continue;
        if (s.rfind("qreg", 0) == 0) {
            std::size_t lb = s.find('['), rb = s.find(']');
            if (lb == std::string::npos || rb == std::string::npos || rb < lb)
                fail("malformed qreg");
            std::string name = s.substr(4, lb - 4);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            int width = 0;
            try {
                width = std::stoi(s.substr(lb + 1, rb - lb - 1));
            } catch (...) {
                fail("malformed qreg width");
            }
            if (width <= 0) fail("qreg width must be positive");
            if (reg_base.count(name)) fail("duplicate register " + name);
            reg_base[name] = total_qubits;
            total_qubits += width;
            continue;
        }

        // gate statement
        if (s.back() != ';') fail("missing semicolon");
        s.pop_back();
        std::size_t sp = s.find_first_of(" \t");
        if (sp == std::string::npos) fail("malformed gate statement");
        PendingGate g;
        g.kind = s.substr(0, sp);
        g.lineno = lineno;
        std::string rest = s.substr(sp + 1);
        std::istringstream ops(rest);
        std::string tok;
        while (std::getline(ops, tok, ',')) {
            std::size_t lb = tok.find('['), rb = tok.find(']');
            if (lb == std::string::npos || rb == std::string::npos) fail("malformed operand");
            std::string rname = tok.substr(0, lb);
            rname.erase(0, rname.find_first_not_of(" \t"));
            rname.erase(rname.find_last_not_of(" \t") + 1);
            int idx = 0;
            try {
                idx = std::stoi(tok.substr(lb + 1, rb - lb - 1));
            } catch (...) {
                fail("malformed operand index");
            }
            g.operands.push_back({rname, idx});
        }
        pending.push_back(std::move(g));
    }

    if (!saw_version) throw QasmParseError("missing OPENQASM 2.0 header");
    if (total_qubits == 0) throw QasmParseError("no qreg declared");

    Circuit c(total_qubits, roles);
    for (const PendingGate& g : pending) {
        lineno = g.lineno;
        std::vector<int> qs;
        for (const auto& [rname, idx] : g.operands) {
            auto it = reg_base.find(rname);
            if (it == reg_base.end()) fail("unknown register " + rname);
            qs.push_back(it->second + idx);
        }
        auto want = [&](std::size_t arity) {
            if (qs.size() != arity) fail("wrong operand count for " + g.kind);
        };
        try {
            if (g.kind == "x") { want(1); c.append(GateOp::x(qs[0])); }
            else if (g.kind == "h") { want(1); c.append(GateOp::h(qs[0])); }
            else if (g.kind == "t") { want(1); c.append(GateOp::t(qs[0])); }
            else if (g.kind == "tdg") { want(1); c.append(GateOp::tdg(qs[0])); }
            else if (g.kind == "cx") { want(2); c.append(GateOp::cnot(qs[0], qs[1])); }
            else if (g.kind == "ccx") { want(3); c.append(GateOp::toffoli(qs[0], qs[1], qs[2])); }
            else fail("unsupported gate " + g.kind);
        } catch (const QasmParseError&) {
            throw;
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }
    return c;
}

}  // namespace qadder
