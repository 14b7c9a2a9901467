// Copyright 2026 The qadder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qadder/circuit.hpp"

namespace qadder {

/// Per-kind gate durations. Dimensionless scheduling uses the defaults of 1;
/// physical (thermal-noise) mode loads nanosecond values from the noise
/// configuration. `measure` is not a circuit gate, it is the readout window
/// appended after the last gate of a measured qubit.
struct GateDurations {
    double x = 1.0;
    double h = 1.0;
    double phase = 1.0;  // T and Tdg
    double cnot = 1.0;
    double toffoli = 1.0;
    double measure = 1.0;

    double of(GateKind k) const {
        switch (k) {
        case GateKind::X: return x;
        case GateKind::H: return h;
        case GateKind::T:
        case GateKind::TDG: return phase;
        case GateKind::CNOT: return cnot;
        case GateKind::TOFFOLI: return toffoli;
        }
        return 1.0;
    }

    void validate() const {
        for (double d : {x, h, phase, cnot, toffoli, measure})
            if (!(d > 0.0))
                throw std::invalid_argument("gate durations must be positive");
    }
};

struct Interval {
    double begin = 0.0;
    double end = 0.0;
    double length() const { return end - begin; }
};

/// ASAP schedule: each gate starts as soon as all its qubits are free.
/// Busy intervals are the gates a qubit participates in; idle intervals are
/// the gaps where a live qubit waits, from time 0 up to its own last
/// operation. Trailing time after a qubit's final gate is not idling — the
/// qubit is done — which is what makes "the LSB waits longest for the
/// reverse computation" a measurable statement.
struct Schedule {
    std::vector<double> start;     // per gate
    std::vector<double> duration;  // per gate
    double makespan = 0.0;
    std::vector<std::vector<Interval>> busy;  // per qubit
    std::vector<std::vector<Interval>> idle;  // per qubit

    double idle_total(int qubit) const {
        double sum = 0.0;
        for (const Interval& iv : idle[static_cast<std::size_t>(qubit)])
            sum += iv.length();
        return sum;
    }
};

inline Schedule schedule_asap(const Circuit& c, const GateDurations& durations = {}) {
    durations.validate();
    Schedule s;
    s.start.reserve(c.size());
    s.duration.reserve(c.size());
    s.busy.resize(static_cast<std::size_t>(c.num_qubits()));
    s.idle.resize(static_cast<std::size_t>(c.num_qubits()));

    std::vector<double> free_at(static_cast<std::size_t>(c.num_qubits()), 0.0);
    for (const GateOp& g : c.gates()) {
        double begin = 0.0;
        for (int i = 0; i < g.arity(); ++i)
            begin = std::max(begin, free_at[static_cast<std::size_t>(g.qubits[i])]);
        const double d = durations.of(g.kind);
        s.start.push_back(begin);
        s.duration.push_back(d);
        for (int i = 0; i < g.arity(); ++i) {
            const auto q = static_cast<std::size_t>(g.qubits[i]);
            free_at[q] = begin + d;
            s.busy[q].push_back({begin, begin + d});
        }
        s.makespan = std::max(s.makespan, begin + d);
    }

    for (int q = 0; q < c.num_qubits(); ++q) {
        double cursor = 0.0;
        auto& gaps = s.idle[static_cast<std::size_t>(q)];
        for (const Interval& iv : s.busy[static_cast<std::size_t>(q)]) {
            if (iv.begin > cursor) gaps.push_back({cursor, iv.begin});
            cursor = iv.end;
        }
    }
    return s;
}

}  // namespace qadder
