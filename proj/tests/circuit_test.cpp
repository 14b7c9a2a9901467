// Copyright 2026 The qadder Authors
// SPDX-License-Identifier: Apache-2.0

#include "qadder/circuit.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qadder/adders.hpp"
#include "qadder/schedule.hpp"

using namespace qadder;

namespace {

// Minimal statevector simulator, independent of the density-matrix engine.
// Used as the oracle for the decomposition invariant: on a basis input the
// decomposed circuit must land on a single basis amplitude, and the induced
// permutation must equal the original circuit's classical action.
struct StateVector {
    int q;
    std::vector<std::complex<double>> amp;

    explicit StateVector(int qubits, std::uint64_t basis) : q(qubits) {
        amp.assign(std::size_t{1} << q, {});
        amp[basis] = 1.0;
    }

    void apply(const GateOp& g) {
        const std::size_t dim = amp.size();
        auto bit = [](int k) { return std::uint64_t{1} << k; };
        switch (g.kind) {
        case GateKind::X:
            for (std::size_t i = 0; i < dim; ++i)
                if (!(i & bit(g.qubits[0]))) std::swap(amp[i], amp[i | bit(g.qubits[0])]);
            return;
        case GateKind::CNOT:
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & bit(g.qubits[0])) && !(i & bit(g.qubits[1])))
                    std::swap(amp[i], amp[i | bit(g.qubits[1])]);
            return;
        case GateKind::TOFFOLI:
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & bit(g.qubits[0])) && (i & bit(g.qubits[1])) &&
                    !(i & bit(g.qubits[2])))
                    std::swap(amp[i], amp[i | bit(g.qubits[2])]);
            return;
        case GateKind::H: {
            const double s = std::sqrt(0.5);
            for (std::size_t i = 0; i < dim; ++i)
                if (!(i & bit(g.qubits[0]))) {
                    const auto a = amp[i], b = amp[i | bit(g.qubits[0])];
                    amp[i] = s * (a + b);
                    amp[i | bit(g.qubits[0])] = s * (a - b);
                }
            return;
        }
        case GateKind::T:
        case GateKind::TDG: {
            const std::complex<double> ph{std::sqrt(0.5),
                                          g.kind == GateKind::T ? std::sqrt(0.5)
                                                                : -std::sqrt(0.5)};
            for (std::size_t i = 0; i < dim; ++i)
                if (i & bit(g.qubits[0])) amp[i] *= ph;
            return;
        }
        }
    }

    // the single basis state carrying (almost) all amplitude, or -1
    std::int64_t collapse() const {
        for (std::size_t i = 0; i < amp.size(); ++i)
            if (std::norm(amp[i]) > 1.0 - 1e-9) return static_cast<std::int64_t>(i);
        return -1;
    }
};

Roles simple_roles() {
    Roles r;
    r.a = {0, 1, 2, 3};
    r.b = {4, 5, 6, 7};
    r.sum = {4, 5, 6, 7};
    return r;
}

TEST(Circuit, EmptyConstruction) {
    Circuit c = new_circuit(8, simple_roles());
    EXPECT_EQ(c.num_qubits(), 8);
    EXPECT_TRUE(c.empty());
}

TEST(Circuit, Cqa1LayoutConstruction) {
    // 2n+2 qubits for n=4 with every role populated
    Roles r = simple_roles();
    r.cin = {8};
    r.cout = {9};
    Circuit c = new_circuit(10, r);
    EXPECT_EQ(c.num_qubits(), 10);
    EXPECT_TRUE(c.gates().empty());
}

TEST(Circuit, ZeroQubitsRejected) {
    EXPECT_THROW(new_circuit(0, Roles{}), std::invalid_argument);
}

TEST(Circuit, OverlappingInputRolesRejected) {
    Roles r;
    r.a = {0, 1};
    r.b = {1, 2};
    EXPECT_THROW(new_circuit(4, r), std::invalid_argument);
}

TEST(Circuit, OutOfRangeRoleRejected) {
    Roles r;
    r.a = {0, 9};
    EXPECT_THROW(new_circuit(4, r), std::out_of_range);
}

TEST(Circuit, SumMayAliasInputRegister) {
    // Output views overlap input registers by design.
    EXPECT_NO_THROW(new_circuit(8, simple_roles()));
}

TEST(Circuit, AppendValidates) {
    Circuit c = new_circuit(9, simple_roles());
    c.append(GateOp::cnot(0, 4));
    EXPECT_EQ(c.size(), 1u);
    c.append(GateOp::toffoli(0, 4, 8));
    EXPECT_EQ(c.size(), 2u);
    EXPECT_THROW(c.append(GateOp::cnot(0, 0)), std::invalid_argument);
    EXPECT_THROW(c.append(GateOp::cnot(0, 12)), std::out_of_range);
    EXPECT_THROW(c.append(GateOp::toffoli(1, 2, 2)), std::invalid_argument);
}

TEST(DepthProfile, Aqa2IsSingleLayer) {
    DepthProfile p = depth_profile(build(AdderSpec(AdderFamily::AQA2, 4)));
    EXPECT_EQ(p.cnot_depth, 1);
    EXPECT_EQ(p.cnot_count, 4);
    EXPECT_EQ(p.toffoli_depth, 0);
    EXPECT_EQ(p.toffoli_count, 0);
}

TEST(DepthProfile, Aqa5TwoTypedLayers) {
    DepthProfile p = depth_profile(build(AdderSpec(AdderFamily::AQA5, 4)));
    EXPECT_EQ(p.cnot_depth, 1);
    EXPECT_EQ(p.toffoli_depth, 1);
    EXPECT_EQ(p.cnot_count, 4);
    EXPECT_EQ(p.toffoli_count, 1);
}

TEST(DepthProfile, Cqa1Counts) {
    DepthProfile p = depth_profile(build(AdderSpec(AdderFamily::CQA1, 4)));
    EXPECT_EQ(p.cnot_count, 17);
    EXPECT_EQ(p.toffoli_count, 8);
}

TEST(DepthProfile, InvariantUnderDisjointInsertion) {
    // Gates on untouched qubits must not change the typed depths.
    Circuit c = build(AdderSpec(AdderFamily::AQA5, 3));
    DepthProfile before = depth_profile(c);
    Roles r = c.roles();
    Circuit widened(c.num_qubits() + 2, r);
    for (const GateOp& g : c.gates()) widened.append(g);
    widened.append(GateOp::x(c.num_qubits()));
    widened.append(GateOp::x(c.num_qubits() + 1));
    DepthProfile after = depth_profile(widened);
    EXPECT_EQ(before.cnot_depth, after.cnot_depth);
    EXPECT_EQ(before.toffoli_depth, after.toffoli_depth);
}

TEST(DecomposeToffoli, CountsAndIdentity) {
    Circuit c = build(AdderSpec(AdderFamily::AQA5, 2));
    Circuit d = decompose_toffoli(c);
    DepthProfile pc = depth_profile(c);
    DepthProfile pd = depth_profile(d);
    EXPECT_EQ(pd.toffoli_count, 0);
    EXPECT_EQ(pd.cnot_count, pc.cnot_count + 6);

    Circuit plain = build(AdderSpec(AdderFamily::AQA2, 3));
    Circuit same = decompose_toffoli(plain);
    EXPECT_EQ(same.gates(), plain.gates());
}

TEST(DecomposeToffoli, PreservesBasisPermutationExhaustively) {
    // every basis state of every circuit up to six qubits, statevector oracle
    for (AdderSpec spec : {AdderSpec(AdderFamily::AQA5, 2), AdderSpec(AdderFamily::TPL13, 2),
                           AdderSpec(AdderFamily::CQA1, 2), AdderSpec(AdderFamily::CQA0, 2)}) {
        const Circuit plain = build(spec);
        const Circuit dec = decompose_toffoli(plain);
        ASSERT_LE(plain.num_qubits(), 6);
        const std::uint64_t dim = 1ull << plain.num_qubits();
        for (std::uint64_t basis = 0; basis < dim; ++basis) {
            StateVector sv(plain.num_qubits(), basis);
            for (const GateOp& g : dec.gates()) sv.apply(g);
            EXPECT_EQ(sv.collapse(),
                      static_cast<std::int64_t>(simulate_basis(plain, basis)))
                << family_name(spec.family) << " basis " << basis;
        }
    }
}

TEST(DecomposeToffoli, Cqa0CnotTotal) {
    // 16 ripple CNOTs plus 6 per decomposed Toffoli
    Circuit d = decompose_toffoli(build(AdderSpec(AdderFamily::CQA0, 4)));
    EXPECT_EQ(depth_profile(d).cnot_count, 64);
    EXPECT_EQ(depth_profile(d).toffoli_count, 0);
}

TEST(Schedule, Aqa2FullyParallel) {
    Schedule s = schedule_asap(build(AdderSpec(AdderFamily::AQA2, 4)));
    for (double t : s.start) EXPECT_DOUBLE_EQ(t, 0.0);
    EXPECT_DOUBLE_EQ(s.makespan, 1.0);
    for (int q = 0; q < 8; ++q) EXPECT_DOUBLE_EQ(s.idle_total(q), 0.0);
}

TEST(Schedule, SequentialOnSharedQubit) {
    Roles r;
    r.sum = {0};
    Circuit c(1, r);
    c.append(GateOp::x(0));
    c.append(GateOp::x(0));
    GateDurations d;
    d.x = 2.5;
    Schedule s = schedule_asap(c, d);
    EXPECT_DOUBLE_EQ(s.start[0], 0.0);
    EXPECT_DOUBLE_EQ(s.start[1], 2.5);
    EXPECT_DOUBLE_EQ(s.makespan, 5.0);
}

TEST(Schedule, LsbIdlesLongerThanMsbInCqa0) {
    Circuit c = build(AdderSpec(AdderFamily::CQA0, 4));
    Schedule s = schedule_asap(c);
    const Roles& r = c.roles();
    EXPECT_GT(s.idle_total(r.sum.front()), s.idle_total(r.sum.back()));
}

TEST(Schedule, ZeroAndSingleLayerMakespans) {
    EXPECT_DOUBLE_EQ(schedule_asap(build(AdderSpec(AdderFamily::AQA1, 4))).makespan, 0.0);
    EXPECT_DOUBLE_EQ(schedule_asap(build(AdderSpec(AdderFamily::AQA3, 4))).makespan, 0.0);
    EXPECT_DOUBLE_EQ(schedule_asap(build(AdderSpec(AdderFamily::AQA2, 4))).makespan, 1.0);
    EXPECT_DOUBLE_EQ(schedule_asap(build(AdderSpec(AdderFamily::AQA4, 4))).makespan, 1.0);
}

TEST(Schedule, RejectsNonPositiveDurations) {
    GateDurations d;
    d.cnot = 0.0;
    EXPECT_THROW(schedule_asap(build(AdderSpec(AdderFamily::AQA2, 2)), d),
                 std::invalid_argument);
}

}  // namespace
