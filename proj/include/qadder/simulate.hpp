// Copyright 2026 The qadder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qadder/adders.hpp"
#include "qadder/channels.hpp"
#include "qadder/circuit.hpp"
#include "qadder/density.hpp"
#include "qadder/noise.hpp"

namespace qadder {

/// Raised when a request exceeds the density-matrix budget (2^12 amplitudes
/// per axis). The CLI maps this to its resource-limit exit code.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxSimQubits = 12;

namespace detail {

struct ThermalFactors {
    double gamma;
    double lam;
};

inline ThermalFactors thermal_factors(const NoiseModel& m, double ns) {
    const double t1 = m.t1_us * 1000.0;
    const double t2 = m.t2_us * 1000.0;
    const double gamma = 1.0 - std::exp(-ns / t1);
    const double inv_tphi = 1.0 / t2 - 0.5 / t1;
    const double lam = inv_tphi > 0.0 ? 1.0 - std::exp(-2.0 * ns * inv_tphi) : 0.0;
    return {gamma, lam};
}

inline void one_qubit_noise(DensityMatrix& rho, const NoiseModel& m, GateKind gk, int q) {
    switch (m.kind) {
    case NoiseKind::Thermal: {
        const ThermalFactors f = thermal_factors(m, m.scaled_ns(gk));
        rho.apply_thermal(q, f.gamma, f.lam);
        return;
    }
    case NoiseKind::Depolarizing:
        rho.apply_depolarizing1(q, m.depol_p1);
        return;
    case NoiseKind::AmplitudeDamping:
        rho.apply_amplitude_damping(q, m.amp_gamma);
        return;
    case NoiseKind::PhaseDamping:
        rho.apply_phase_damping(q, m.phase_lambda);
        return;
    case NoiseKind::Bitflip:
        rho.apply_bitflip(q, m.flip_p);
        return;
    case NoiseKind::None:
        return;
    }
}

// Noise bound to one executed gate, after its unitary.
inline void gate_noise(DensityMatrix& rho, const NoiseModel& m, const GateOp& g) {
    if (m.kind == NoiseKind::None) return;
    switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::T:
    case GateKind::TDG:
        one_qubit_noise(rho, m, g.kind, g.qubits[0]);
        return;
    case GateKind::CNOT:
        switch (m.kind) {
        case NoiseKind::Depolarizing:
            rho.apply_depolarizing2(g.qubits[0], g.qubits[1], m.depol_p2);
            return;
        case NoiseKind::Bitflip:
            if (m.bitflip_joint_2q) {
                rho.apply_bitflip_joint(g.qubits[0], g.qubits[1], m.flip_p);
            } else {
                rho.apply_bitflip(g.qubits[0], m.flip_p);
                rho.apply_bitflip(g.qubits[1], m.flip_p);
            }
            return;
        case NoiseKind::Thermal: {
            const ThermalFactors f = thermal_factors(m, m.scaled_ns(GateKind::CNOT));
            rho.apply_thermal(g.qubits[0], f.gamma, f.lam);
            rho.apply_thermal(g.qubits[1], f.gamma, f.lam);
            return;
        }
        default:  // damping models attach to 1-qubit gates only
            return;
        }
    case GateKind::TOFFOLI:
        // native handling: the two-qubit rule on both control-target pairs
        switch (m.kind) {
        case NoiseKind::Depolarizing:
            rho.apply_depolarizing2(g.qubits[0], g.qubits[2], m.depol_p2);
            rho.apply_depolarizing2(g.qubits[1], g.qubits[2], m.depol_p2);
            return;
        case NoiseKind::Bitflip:
            for (int pair = 0; pair < 2; ++pair) {
                if (m.bitflip_joint_2q) {
                    rho.apply_bitflip_joint(g.qubits[pair], g.qubits[2], m.flip_p);
                } else {
                    rho.apply_bitflip(g.qubits[pair], m.flip_p);
                    rho.apply_bitflip(g.qubits[2], m.flip_p);
                }
            }
            return;
        case NoiseKind::Thermal: {
            const ThermalFactors f = thermal_factors(m, m.scaled_ns(GateKind::TOFFOLI));
            for (int i = 0; i < 3; ++i) rho.apply_thermal(g.qubits[i], f.gamma, f.lam);
            return;
        }
        default:
            return;
        }
    }
}

// Idle relaxation for a gap on one qubit; only the duration-based models
// accumulate idle error.
inline void idle_noise(DensityMatrix& rho, const NoiseModel& m, int q, double gap_ns) {
    if (gap_ns <= 0.0) return;
    switch (m.kind) {
    case NoiseKind::Thermal: {
        const ThermalFactors f = thermal_factors(m, gap_ns);
        rho.apply_thermal(q, f.gamma, f.lam);
        return;
    }
    case NoiseKind::AmplitudeDamping: {
        const double gamma = 1.0 - std::exp(-gap_ns / (m.t1_us * 1000.0));
        rho.apply_amplitude_damping(q, gamma);
        return;
    }
    default:
        return;
    }
}

}  // namespace detail

/// Evolves |input_bits><input_bits| through the circuit under the noise
/// model: optional reset faults, noisy preparation X gates for every set
/// input bit, each gate followed by its bound channels, optional idle
/// relaxation in schedule gaps, and for thermal noise a readout relaxation
/// window on every measured qubit.
inline DensityMatrix run_noisy(const Circuit& circuit, const NoiseModel& model,
                               std::uint64_t input_bits,
                               const ReadoutModel* spam = nullptr) {
    model.validate();
    if (circuit.num_qubits() > kMaxSimQubits)
        throw ResourceLimitError("density simulation limited to 12 qubits");

    const bool decompose =
        model.toffoli_policy == ToffoliPolicy::DecomposeFirst && model.kind != NoiseKind::None;
    const Circuit body = decompose ? decompose_toffoli(circuit) : circuit;

    DensityMatrix rho = DensityMatrix::basis(circuit.num_qubits(), 0);

    if (spam) {
        spam->validate();
        for (int q = 0; q < circuit.num_qubits(); ++q)
            if (spam->p_reset_to_0_error > 0.0)
                rho.apply_bitflip(q, spam->p_reset_to_0_error);
    }

    std::vector<double> busy_end(static_cast<std::size_t>(circuit.num_qubits()), 0.0);
    auto step = [&](const GateOp& g, bool is_prep) {
        if (model.idle_mode) {
            double start = 0.0;
            for (int i = 0; i < g.arity(); ++i)
                start = std::max(start, busy_end[static_cast<std::size_t>(g.qubits[i])]);
            const double dur = model.scaled_ns(g.kind);
            for (int i = 0; i < g.arity(); ++i) {
                auto& end = busy_end[static_cast<std::size_t>(g.qubits[i])];
                detail::idle_noise(rho, model, g.qubits[i], start - end);
                end = start + dur;
            }
        }
        rho.apply_gate(g);
        if (!is_prep || model.apply_to_prep) detail::gate_noise(rho, model, g);
    };

    for (int q = 0; q < circuit.num_qubits(); ++q)
        if (input_bits >> q & 1) step(GateOp::x(q), true);
    for (const GateOp& g : body.gates()) step(g, false);

    if (model.kind == NoiseKind::Thermal) {
        const detail::ThermalFactors f =
            detail::thermal_factors(model, model.durations_ns.measure * model.time_scale);
        for (int q : circuit.roles().sum) rho.apply_thermal(q, f.gamma, f.lam);
        for (int q : circuit.roles().cout) rho.apply_thermal(q, f.gamma, f.lam);
    }
    return rho;
}

/// Probability that measuring the output register (sum qubits plus carry-out
/// when present) yields the circuit's own noiseless result for (a, b) with
/// no carry-in. Computed exactly from the diagonal; the optional readout
/// model folds a per-bit confusion matrix over the marginal.
inline double success_probability(const DensityMatrix& rho, const AdderSpec& spec,
                                  const Roles& roles, std::uint64_t a, std::uint64_t b,
                                  const ReadoutModel* readout = nullptr) {
    const std::uint64_t intended = eval_classical(spec, a, b, 0);
    std::vector<int> measured = roles.sum;
    for (int q : roles.cout) measured.push_back(q);
    std::uint64_t mask = 0, value = 0;
    for (std::size_t i = 0; i < measured.size(); ++i) {
        mask |= std::uint64_t{1} << measured[i];
        if (intended >> i & 1) value |= std::uint64_t{1} << measured[i];
    }
    if (!readout) return rho.marginal_probability(mask, value);

    readout->validate();
    double p = 0.0;
    for (std::size_t z = 0; z < rho.dim(); ++z) {
        const double pz = rho.diag(z);
        if (pz == 0.0) continue;
        double w = 1.0;
        for (std::size_t i = 0; i < measured.size(); ++i) {
            const int truth = static_cast<int>(z >> measured[i] & 1);
            const int want = static_cast<int>(intended >> i & 1);
            w *= readout->confusion(want, truth);
        }
        p += pz * w;
    }
    return p;
}

inline double success_probability(const DensityMatrix& rho, const AdderSpec& spec,
                                  std::uint64_t a, std::uint64_t b) {
    return success_probability(rho, spec, build(spec).roles(), a, b);
}

/// Per-adder, per-noise-model result row: the average output probability
/// over all 4^n basis input pairs plus the full per-input vector and the
/// mode flags that produced it.
struct FidelityReport {
    AdderFamily family = AdderFamily::AQA1;
    int n = 1;
    NoiseKind noise = NoiseKind::None;
    ToffoliPolicy toffoli_policy = ToffoliPolicy::DecomposeFirst;
    bool idle_mode = false;
    bool apply_to_prep = true;
    double avg_success = 0.0;
    std::vector<double> per_input;  // index (a << n) | b
};

/// Exact expectation over every input pair, parallelized over inputs with a
/// fixed-order reduction so results are bit-identical run to run.
inline FidelityReport fidelity_sweep(const AdderSpec& spec, const NoiseModel& model,
                                     const ReadoutModel* spam = nullptr) {
    const Circuit circuit = build(spec);
    if (circuit.num_qubits() > kMaxSimQubits)
        throw ResourceLimitError("fidelity sweep exceeds the 12-qubit budget");
    const std::uint64_t lim = std::uint64_t{1} << spec.n;
    const std::size_t total = static_cast<std::size_t>(lim * lim);

    FidelityReport rep;
    rep.family = spec.family;
    rep.n = spec.n;
    rep.noise = model.kind;
    rep.toffoli_policy = model.toffoli_policy;
    rep.idle_mode = model.idle_mode;
    rep.apply_to_prep = model.apply_to_prep;
    rep.per_input.assign(total, 0.0);

    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, 8);
    workers = std::min<unsigned>(workers, static_cast<unsigned>(total));

    auto run_chunk = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const std::uint64_t a = idx >> spec.n;
            const std::uint64_t b = idx & (lim - 1);
            DensityMatrix rho =
                run_noisy(circuit, model, detail::input_mask(circuit, a, b, 0), spam);
            rep.per_input[idx] =
                success_probability(rho, spec, circuit.roles(), a, b, spam);
        }
    };

    if (workers <= 1) {
        run_chunk(0, total);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(total, lo + chunk);
            if (lo < hi) pool.emplace_back(run_chunk, lo, hi);
        }
        for (std::thread& t : pool) t.join();
    }

    double sum = 0.0;
    for (double v : rep.per_input) sum += v;
    rep.avg_success = sum / static_cast<double>(total);
    return rep;
}

}  // namespace qadder
