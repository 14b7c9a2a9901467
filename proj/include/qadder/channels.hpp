// Copyright 2026 The qadder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qadder {

using cplx = std::complex<double>;

/// Dense complex matrix of dimension 2 or 4, row-major. Small enough to live
/// on the stack of whoever embeds it into a register.
struct SmallMat {
    int dim = 2;
    std::vector<cplx> m;  // dim*dim entries

    SmallMat() : m(4, cplx{0.0, 0.0}) {}
    explicit SmallMat(int d) : dim(d), m(static_cast<std::size_t>(d) * d, cplx{0.0, 0.0}) {}

    cplx& at(int r, int c) { return m[static_cast<std::size_t>(r) * dim + c]; }
    const cplx& at(int r, int c) const { return m[static_cast<std::size_t>(r) * dim + c]; }

    static SmallMat identity(int d) {
        SmallMat u(d);
        for (int i = 0; i < d; ++i) u.at(i, i) = 1.0;
        return u;
    }
    static SmallMat scaled_identity(int d, double s) {
        SmallMat u = identity(d);
        for (int i = 0; i < d; ++i) u.at(i, i) = s;
        return u;
    }

    SmallMat operator*(const SmallMat& o) const {
        SmallMat out(dim);
        for (int r = 0; r < dim; ++r)
            for (int k = 0; k < dim; ++k) {
                const cplx v = at(r, k);
                if (v == cplx{}) continue;
                for (int c = 0; c < dim; ++c) out.at(r, c) += v * o.at(k, c);
            }
        return out;
    }

    SmallMat scaled(double s) const {
        SmallMat out = *this;
        for (cplx& v : out.m) v *= s;
        return out;
    }
};

/// Completely positive trace-preserving map given by Kraus operators over
/// one or two qubits: rho -> sum_i K_i rho K_i^dagger.
struct KrausChannel {
    int arity = 1;
    std::vector<SmallMat> ops;
    std::string name;
};

namespace paulis {

inline SmallMat I() { return SmallMat::identity(2); }
inline SmallMat X() {
    SmallMat u(2);
    u.at(0, 1) = 1.0;
    u.at(1, 0) = 1.0;
    return u;
}
inline SmallMat Y() {
    SmallMat u(2);
    u.at(0, 1) = cplx{0.0, -1.0};
    u.at(1, 0) = cplx{0.0, 1.0};
    return u;
}
inline SmallMat Z() {
    SmallMat u(2);
    u.at(0, 0) = 1.0;
    u.at(1, 1) = -1.0;
    return u;
}

inline SmallMat kron(const SmallMat& a, const SmallMat& b) {
    SmallMat out(a.dim * b.dim);
    for (int ra = 0; ra < a.dim; ++ra)
        for (int ca = 0; ca < a.dim; ++ca)
            for (int rb = 0; rb < b.dim; ++rb)
                for (int cb = 0; cb < b.dim; ++cb)
                    out.at(ra * b.dim + rb, ca * b.dim + cb) = a.at(ra, ca) * b.at(rb, cb);
    return out;
}

}  // namespace paulis

/// With probability p the touched qubits are replaced by the maximally mixed
/// state. Kraus form: uniform mixture over the 4^arity - 1 non-identity
/// Paulis, each carrying weight p / 4^arity, identity the complement.
inline KrausChannel depolarizing(double p, int arity) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("depolarizing: p outside [0,1]");
    if (arity != 1 && arity != 2) throw std::invalid_argument("depolarizing: arity 1 or 2");
    KrausChannel ch;
    ch.arity = arity;
    ch.name = "depolarizing";
    const int paulis_total = arity == 1 ? 4 : 16;
    std::vector<SmallMat> basis;
    if (arity == 1) {
        basis = {paulis::I(), paulis::X(), paulis::Y(), paulis::Z()};
    } else {
        const SmallMat singles[4] = {paulis::I(), paulis::X(), paulis::Y(), paulis::Z()};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) basis.push_back(paulis::kron(singles[i], singles[j]));
    }
    const double w_other = p / paulis_total;
    const double w_id = 1.0 - p + w_other;
    ch.ops.push_back(basis[0].scaled(std::sqrt(w_id)));
    for (std::size_t i = 1; i < basis.size(); ++i)
        if (w_other > 0.0) ch.ops.push_back(basis[i].scaled(std::sqrt(w_other)));
    return ch;
}

/// Energy dissipation: |1> decays to |0> with probability gamma, |0> is a
/// fixed point.
inline KrausChannel amplitude_damping(double gamma) {
    if (gamma < 0.0 || gamma > 1.0)
        throw std::invalid_argument("amplitude_damping: gamma outside [0,1]");
    KrausChannel ch;
    ch.arity = 1;
    ch.name = "amplitude_damping";
    SmallMat k0(2);
    k0.at(0, 0) = 1.0;
    k0.at(1, 1) = std::sqrt(1.0 - gamma);
    SmallMat k1(2);
    k1.at(0, 1) = std::sqrt(gamma);
    ch.ops = {k0, k1};
    return ch;
}

/// Pure dephasing: off-diagonal density elements shrink by sqrt(1 - lam),
/// diagonals are exactly fixed.
inline KrausChannel phase_damping(double lam) {
    if (lam < 0.0 || lam > 1.0)
        throw std::invalid_argument("phase_damping: lambda outside [0,1]");
    KrausChannel ch;
    ch.arity = 1;
    ch.name = "phase_damping";
    SmallMat k0(2);
    k0.at(0, 0) = 1.0;
    k0.at(1, 1) = std::sqrt(1.0 - lam);
    SmallMat k1(2);
    k1.at(1, 1) = std::sqrt(lam);
    ch.ops = {k0, k1};
    return ch;
}

/// X with probability p.
inline KrausChannel bitflip(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("bitflip: p outside [0,1]");
    KrausChannel ch;
    ch.arity = 1;
    ch.name = "bitflip";
    ch.ops = {SmallMat::scaled_identity(2, std::sqrt(1.0 - p)),
              paulis::X().scaled(std::sqrt(p))};
    return ch;
}

/// Correlated two-qubit variant: X on both qubits with probability p. Kept
/// configurable; the independent per-qubit reading is the benchmark default.
inline KrausChannel bitflip_joint(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("bitflip_joint: p outside [0,1]");
    KrausChannel ch;
    ch.arity = 2;
    ch.name = "bitflip_joint";
    ch.ops = {SmallMat::scaled_identity(4, std::sqrt(1.0 - p)),
              paulis::kron(paulis::X(), paulis::X()).scaled(std::sqrt(p))};
    return ch;
}

/// Thermal relaxation over a time window: amplitude damping with
/// gamma = 1 - exp(-t/T1) composed with pure dephasing at the rate
/// 1/T_phi = 1/T2 - 1/(2 T1), so coherences decay as exp(-t/T2) overall.
/// Requires the physical regime T2 <= 2 T1. Time units just need to agree.
inline KrausChannel thermal(double t1, double t2, double duration) {
    if (!(t1 > 0.0) || !(t2 > 0.0)) throw std::invalid_argument("thermal: T1, T2 must be positive");
    if (t2 > 2.0 * t1) throw std::invalid_argument("thermal: unphysical pair, T2 > 2*T1");
    if (duration < 0.0) throw std::invalid_argument("thermal: negative duration");
    const double gamma = 1.0 - std::exp(-duration / t1);
    const double inv_tphi = 1.0 / t2 - 0.5 / t1;
    const double lam = inv_tphi > 0.0 ? 1.0 - std::exp(-2.0 * duration * inv_tphi) : 0.0;
    KrausChannel amp = amplitude_damping(gamma);
    KrausChannel deph = phase_damping(lam);
    KrausChannel ch;
    ch.arity = 1;
    ch.name = "thermal";
    for (const SmallMat& p : deph.ops)
        for (const SmallMat& a : amp.ops) {
            SmallMat k = p * a;
            bool nonzero = false;
            for (const cplx& v : k.m) nonzero |= v != cplx{};
            if (nonzero) ch.ops.push_back(k);
        }
    return ch;
}

/// Classical state-preparation and readout faults: a confusion matrix on
/// measured bits plus reset errors at preparation.
struct ReadoutModel {
    double p_meas_1_given_0 = 0.05;
    double p_meas_0_given_1 = 0.1;
    double p_reset_to_0_error = 0.02;  // qubit reset to |0> lands in |1>
    double p_reset_to_1_error = 0.04;  // qubit reset to |1> lands in |0>

    void validate() const {
        for (double p : {p_meas_1_given_0, p_meas_0_given_1, p_reset_to_0_error,
                         p_reset_to_1_error})
            if (p < 0.0 || p > 1.0)
                throw std::invalid_argument("readout probabilities must lie in [0,1]");
    }

    // P(measured m | true z)
    double confusion(int measured, int truth) const {
        if (truth == 0) return measured == 1 ? p_meas_1_given_0 : 1.0 - p_meas_1_given_0;
        return measured == 0 ? p_meas_0_given_1 : 1.0 - p_meas_0_given_1;
    }
};

inline ReadoutModel readout_spam_model(double p10, double p01, double reset0, double reset1) {
    ReadoutModel m{p10, p01, reset0, reset1};
    m.validate();
    return m;
}

/// Max deviation of sum_i K_i^dagger K_i from the identity; 0 for an exact
/// CPTP channel.
inline double cptp_defect(const KrausChannel& ch) {
    const int d = ch.arity == 1 ? 2 : 4;
    SmallMat acc(d);
    for (const SmallMat& k : ch.ops)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                cplx s{};
                for (int i = 0; i < d; ++i) s += std::conj(k.at(i, r)) * k.at(i, c);
                acc.at(r, c) += s;
            }
    double worst = 0.0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            const cplx want = r == c ? cplx{1.0, 0.0} : cplx{};
            worst = std::max(worst, std::abs(acc.at(r, c) - want));
        }
    return worst;
}

}  // namespace qadder
