// Copyright 2026 The qadder Authors
// SPDX-License-Identifier: Apache-2.0

#include "qadder/channels.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qadder/noise.hpp"

using namespace qadder;

namespace {

TEST(Channels, CptpCompletenessForAllShippedParameters) {
    EXPECT_LT(cptp_defect(depolarizing(0.005, 1)), 1e-12);
    EXPECT_LT(cptp_defect(depolarizing(0.01, 2)), 1e-12);
    EXPECT_LT(cptp_defect(amplitude_damping(0.01)), 1e-12);
    EXPECT_LT(cptp_defect(phase_damping(0.01)), 1e-12);
    EXPECT_LT(cptp_defect(bitflip(0.01)), 1e-12);
    EXPECT_LT(cptp_defect(bitflip_joint(0.01)), 1e-12);
    EXPECT_LT(cptp_defect(thermal(50000.0, 70000.0, 1270.0)), 1e-12);
    EXPECT_LT(cptp_defect(thermal(50000.0, 70000.0, 0.0)), 1e-12);
    EXPECT_LT(cptp_defect(thermal(50000.0, 100000.0, 300.0)), 1e-12);
    EXPECT_LT(cptp_defect(depolarizing(1.0, 1)), 1e-12);
    EXPECT_LT(cptp_defect(depolarizing(1.0, 2)), 1e-12);
    EXPECT_LT(cptp_defect(phase_damping(1.0)), 1e-12);
    EXPECT_LT(cptp_defect(amplitude_damping(1.0)), 1e-12);
}

TEST(Channels, ZeroStrengthIsIdentity) {
    KrausChannel d = depolarizing(0.0, 1);
    ASSERT_EQ(d.ops.size(), 1u);
    EXPECT_DOUBLE_EQ(d.ops[0].at(0, 0).real(), 1.0);
    EXPECT_DOUBLE_EQ(d.ops[0].at(1, 1).real(), 1.0);
    EXPECT_EQ(d.ops[0].at(0, 1), cplx{});

    KrausChannel a = amplitude_damping(0.0);
    EXPECT_DOUBLE_EQ(a.ops[0].at(1, 1).real(), 1.0);
    EXPECT_EQ(a.ops[1].at(0, 1), cplx{});
}

TEST(Channels, AmplitudeDampingDecayRates) {
    // |1><1| keeps weight 1-gamma on the excited state; |0><0| is fixed.
    KrausChannel ch = amplitude_damping(0.01);
    double p1 = std::norm(ch.ops[0].at(1, 1));
    EXPECT_NEAR(p1, 0.99, 1e-12);
    double leak_from_0 = std::norm(ch.ops[0].at(0, 0)) + std::norm(ch.ops[1].at(1, 0)) +
                         std::norm(ch.ops[1].at(0, 0));
    EXPECT_NEAR(leak_from_0, 1.0, 1e-12);
}

TEST(Channels, PhaseDampingOffDiagonalFactor) {
    KrausChannel ch = phase_damping(0.19);
    // coherence factor is k0[0,0]*conj(k0[1,1]) since k1 only hits |1>
    double factor = (ch.ops[0].at(0, 0) * std::conj(ch.ops[0].at(1, 1))).real();
    EXPECT_NEAR(factor, std::sqrt(1.0 - 0.19), 1e-12);
}

TEST(Channels, ThermalMatchesClosedFormDecay) {
    // P(1 stays 1) after t is exp(-t/T1).
    const double t = 1263.6;
    KrausChannel ch = thermal(50000.0, 70000.0, t);
    double stay = 0.0;
    for (const SmallMat& k : ch.ops) stay += std::norm(k.at(1, 1));
    EXPECT_NEAR(stay, std::exp(-t / 50000.0), 1e-12);
    EXPECT_NEAR(stay, 0.975, 5e-4);
}

TEST(Channels, ThermalRejectsUnphysicalPairs) {
    EXPECT_THROW(thermal(50000.0, 120000.0, 100.0), std::invalid_argument);
    EXPECT_THROW(thermal(-1.0, 1.0, 100.0), std::invalid_argument);
    EXPECT_THROW(thermal(1.0, 1.0, -5.0), std::invalid_argument);
}

TEST(Channels, ParameterRangeChecks) {
    EXPECT_THROW(depolarizing(-0.1, 1), std::invalid_argument);
    EXPECT_THROW(depolarizing(1.1, 2), std::invalid_argument);
    EXPECT_THROW(depolarizing(0.5, 3), std::invalid_argument);
    EXPECT_THROW(amplitude_damping(2.0), std::invalid_argument);
    EXPECT_THROW(phase_damping(-0.5), std::invalid_argument);
    EXPECT_THROW(bitflip(1.5), std::invalid_argument);
}

TEST(Readout, ConfusionMatrix) {
    ReadoutModel m = readout_spam_model(0.05, 0.1, 0.02, 0.04);
    EXPECT_DOUBLE_EQ(m.confusion(1, 0), 0.05);
    EXPECT_DOUBLE_EQ(m.confusion(0, 0), 0.95);
    EXPECT_DOUBLE_EQ(m.confusion(0, 1), 0.1);
    EXPECT_DOUBLE_EQ(m.confusion(1, 1), 0.9);
    EXPECT_THROW(readout_spam_model(1.2, 0.1, 0.0, 0.0), std::invalid_argument);

    ReadoutModel ident = readout_spam_model(0.0, 0.0, 0.0, 0.0);
    EXPECT_DOUBLE_EQ(ident.confusion(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(ident.confusion(1, 1), 1.0);
}

TEST(NoiseModel, CalibratedScaleSolvesTheAnchor) {
    NoiseModel m = table_defaults(NoiseKind::Thermal);
    // prep X plus readout window on a measured set bit
    const double window = (m.durations_ns.x + m.durations_ns.measure) * m.time_scale;
    const double gamma = 1.0 - std::exp(-window / (m.t1_us * 1000.0));
    EXPECT_NEAR(std::pow(1.0 - gamma / 2.0, 4.0), kThermalAnchorFidelity, 1e-12);
    // the anchor's effective gate window is about 1.26 microseconds
    EXPECT_NEAR(window / 1000.0, 1.2636, 5e-4);
}

TEST(NoiseModel, Parsers) {
    EXPECT_EQ(parse_noise("thermal"), NoiseKind::Thermal);
    EXPECT_EQ(parse_noise("amplitude"), NoiseKind::AmplitudeDamping);
    EXPECT_EQ(parse_noise("amplitude_damping"), NoiseKind::AmplitudeDamping);
    EXPECT_THROW(parse_noise("cosmic"), std::invalid_argument);
    EXPECT_EQ(parse_policy("native"), ToffoliPolicy::NativePairwise);
    EXPECT_EQ(parse_policy("decompose"), ToffoliPolicy::DecomposeFirst);
    EXPECT_THROW(parse_policy("maybe"), std::invalid_argument);
}

TEST(NoiseModel, ValidationCatchesBadParameters) {
    NoiseModel m;
    m.kind = NoiseKind::Bitflip;
    m.flip_p = 1.5;
    EXPECT_THROW(m.validate(), std::invalid_argument);
    NoiseModel t;
    t.kind = NoiseKind::Thermal;
    t.t2_us = 500.0;
    EXPECT_THROW(t.validate(), std::invalid_argument);
}

}  // namespace
