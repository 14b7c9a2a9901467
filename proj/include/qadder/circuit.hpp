// Copyright 2026 The qadder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qadder {

/// Gate vocabulary. Adder generators emit only X/CNOT/TOFFOLI; the phase and
/// Hadamard kinds appear when a circuit is run through decompose_toffoli().
enum class GateKind : std::uint8_t { X, CNOT, TOFFOLI, H, T, TDG };

constexpr int gate_arity(GateKind k) {
    switch (k) {
    case GateKind::CNOT: return 2;
    case GateKind::TOFFOLI: return 3;
    default: return 1;
    }
}

constexpr std::string_view gate_name(GateKind k) {
    switch (k) {
    case GateKind::X: return "x";
    case GateKind::CNOT: return "cx";
    case GateKind::TOFFOLI: return "ccx";
    case GateKind::H: return "h";
    case GateKind::T: return "t";
    case GateKind::TDG: return "tdg";
    }
    return "?";
}

/// One gate instance. Operand order is (controls..., target); the target is
/// always the last entry.
struct GateOp {
    GateKind kind = GateKind::X;
    std::array<int, 3> qubits{};

    static GateOp x(int q) { return {GateKind::X, {q, 0, 0}}; }
    static GateOp h(int q) { return {GateKind::H, {q, 0, 0}}; }
    static GateOp t(int q) { return {GateKind::T, {q, 0, 0}}; }
    static GateOp tdg(int q) { return {GateKind::TDG, {q, 0, 0}}; }
    static GateOp cnot(int control, int target) {
        return {GateKind::CNOT, {control, target, 0}};
    }
    static GateOp toffoli(int c1, int c2, int target) {
        return {GateKind::TOFFOLI, {c1, c2, target}};
    }

    int arity() const { return gate_arity(kind); }
    int target() const { return qubits[arity() - 1]; }

    bool operator==(const GateOp&) const = default;
};

/// Named qubit groups. The input-side groups (a, b, cin, ancilla) must be
/// pairwise disjoint; sum and cout are output views and may alias input
/// qubits (a pass-through sum lives on the register it was read from), but
/// never each other. Lists are ordered LSB first.
struct Roles {
    std::vector<int> a;
    std::vector<int> b;
    std::vector<int> cin;
    std::vector<int> ancilla;
    std::vector<int> sum;
    std::vector<int> cout;

    bool operator==(const Roles&) const = default;
};

/// Gate-level circuit IR: a fixed-width qubit register, an ordered gate list
/// and the role map. Construction validates roles; append() validates each
/// gate. After building, treat circuits as immutable values — every analysis
/// function in this library is pure.
class Circuit {
  public:
    Circuit(int num_qubits, Roles roles)
        : num_qubits_(num_qubits), roles_(std::move(roles)) {
        if (num_qubits <= 0)
            throw std::invalid_argument("circuit needs at least one qubit");
        validate_roles();
    }

    void append(const GateOp& g) {
        const int n = g.arity();
        for (int i = 0; i < n; ++i) {
            if (g.qubits[i] < 0 || g.qubits[i] >= num_qubits_)
                throw std::out_of_range("gate qubit " + std::to_string(g.qubits[i]) +
                                        " outside register of size " +
                                        std::to_string(num_qubits_));
            for (int j = i + 1; j < n; ++j)
                if (g.qubits[i] == g.qubits[j])
                    throw std::invalid_argument("gate operands must be distinct qubits");
        }
        gates_.push_back(g);
    }

    int num_qubits() const { return num_qubits_; }
    const std::vector<GateOp>& gates() const { return gates_; }
    const Roles& roles() const { return roles_; }
    bool empty() const { return gates_.empty(); }
    std::size_t size() const { return gates_.size(); }

  private:
    void validate_roles() const {
        std::vector<int> seen(static_cast<std::size_t>(num_qubits_), 0);
        auto check_group = [&](const std::vector<int>& qs, bool track) {
            for (int q : qs) {
                if (q < 0 || q >= num_qubits_)
                    throw std::out_of_range("role qubit " + std::to_string(q) +
                                            " outside register");
                if (track && seen[static_cast<std::size_t>(q)]++)
                    throw std::invalid_argument("input roles overlap on qubit " +
                                                std::to_string(q));
            }
        };
        check_group(roles_.a, true);
        check_group(roles_.b, true);
        check_group(roles_.cin, true);
        check_group(roles_.ancilla, true);
        std::fill(seen.begin(), seen.end(), 0);
        check_group(roles_.sum, true);
        check_group(roles_.cout, true);
    }

    int num_qubits_;
    std::vector<GateOp> gates_;
    Roles roles_;
};

/// Factory mirroring the builder entry point: an empty circuit with roles.
inline Circuit new_circuit(int num_qubits, Roles roles) {
    return Circuit(num_qubits, std::move(roles));
}

/// Gate totals plus typed critical-path depths. The depths are measured on
/// the gate dependency DAG (two gates depend iff they share a qubit, earlier
/// list position first): among all paths the one maximizing
/// (toffoli count, cnot count) lexicographically is chosen, and the two
/// depths are that path's per-kind counts. Toffolis dominate cost, so they
/// take precedence in the tie-break.
struct DepthProfile {
    long long cnot_depth = 0;
    long long toffoli_depth = 0;
    long long cnot_count = 0;
    long long toffoli_count = 0;
    long long x_count = 0;

    bool operator==(const DepthProfile&) const = default;
};

inline DepthProfile depth_profile(const Circuit& c) {
    DepthProfile p;
    struct PathLen {
        long long toffolis = 0;
        long long cnots = 0;
        bool operator<(const PathLen& o) const {
            return toffolis != o.toffolis ? toffolis < o.toffolis : cnots < o.cnots;
        }
    };
    std::vector<PathLen> frontier(static_cast<std::size_t>(c.num_qubits()));
    PathLen best;
    for (const GateOp& g : c.gates()) {
        switch (g.kind) {
        case GateKind::X: ++p.x_count; break;
        case GateKind::CNOT: ++p.cnot_count; break;
        case GateKind::TOFFOLI: ++p.toffoli_count; break;
        default: break;
        }
        PathLen in;
        for (int i = 0; i < g.arity(); ++i)
            in = std::max(in, frontier[static_cast<std::size_t>(g.qubits[i])]);
        if (g.kind == GateKind::CNOT) ++in.cnots;
        if (g.kind == GateKind::TOFFOLI) ++in.toffolis;
        for (int i = 0; i < g.arity(); ++i)
            frontier[static_cast<std::size_t>(g.qubits[i])] = in;
        best = std::max(best, in);
    }
    p.cnot_depth = best.cnots;
    p.toffoli_depth = best.toffolis;
    return p;
}

/// Replaces every Toffoli with the standard 6-CNOT, 7-phase-gate network
/// (plus two Hadamards on the target). The replacement acts identically on
/// computational basis states; other gates and the role map are untouched.
inline Circuit decompose_toffoli(const Circuit& c) {
    Circuit out(c.num_qubits(), c.roles());
    for (const GateOp& g : c.gates()) {
        if (g.kind != GateKind::TOFFOLI) {
            out.append(g);
            continue;
        }
        const int c1 = g.qubits[0], c2 = g.qubits[1], t = g.qubits[2];
        out.append(GateOp::h(t));
        out.append(GateOp::cnot(c2, t));
        out.append(GateOp::tdg(t));
        out.append(GateOp::cnot(c1, t));
        out.append(GateOp::t(t));
        out.append(GateOp::cnot(c2, t));
        out.append(GateOp::tdg(t));
        out.append(GateOp::cnot(c1, t));
        out.append(GateOp::t(c2));
        out.append(GateOp::t(t));
        out.append(GateOp::h(t));
        out.append(GateOp::cnot(c1, c2));
        out.append(GateOp::t(c1));
        out.append(GateOp::tdg(c2));
        out.append(GateOp::cnot(c1, c2));
    }
    return out;
}

}  // namespace qadder
