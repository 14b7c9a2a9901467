// Copyright 2026 The qadder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qadder/channels.hpp"
#include "qadder/circuit.hpp"

namespace qadder {

/// Exact density matrix over q qubits, basis index bit k = qubit k.
///
/// Storage starts as the 2^q diagonal: basis-state inputs evolved through
/// X/CNOT/Toffoli and the benchmark channels never leave the diagonal, and
/// the class tracks that invariant so such runs cost 2^q per step instead of
/// 4^q. The first Hadamard promotes to the full 2^q x 2^q dense matrix.
/// Both representations are exact; promotion changes nothing numerically.
class DensityMatrix {
  public:
    static DensityMatrix basis(int q, std::uint64_t bits) {
        DensityMatrix rho(q);
        rho.data_.assign(rho.dim_, cplx{});
        rho.data_[bits] = 1.0;
        return rho;
    }

    /// bitstring[k] is qubit k ('0' or '1'), so "10" puts qubit 0 in |1>.
    static DensityMatrix from_bitstring(int q, std::string_view bitstring) {
        if (static_cast<int>(bitstring.size()) != q)
            throw std::invalid_argument("bitstring length must equal qubit count");
        std::uint64_t bits = 0;
        for (int k = 0; k < q; ++k) {
            if (bitstring[k] != '0' && bitstring[k] != '1')
                throw std::invalid_argument("bitstring must be binary");
            if (bitstring[k] == '1') bits |= std::uint64_t{1} << k;
        }
        return basis(q, bits);
    }

    int num_qubits() const { return q_; }
    std::size_t dim() const { return dim_; }
    bool diagonal_mode() const { return diagonal_; }

    cplx at(std::size_t r, std::size_t c) const {
        if (diagonal_) return r == c ? data_[r] : cplx{};
        return data_[r * dim_ + c];
    }

    double diag(std::size_t i) const {
        return (diagonal_ ? data_[i] : data_[i * dim_ + i]).real();
    }

    double trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += diag(i);
        return t;
    }

    double hermiticity_defect() const {
        if (diagonal_) {
            double worst = 0.0;
            for (std::size_t i = 0; i < dim_; ++i) worst = std::max(worst, std::abs(data_[i].imag()));
            return worst;
        }
        double worst = 0.0;
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = r; c < dim_; ++c)
                worst = std::max(worst, std::abs(data_[r * dim_ + c] -
                                                 std::conj(data_[c * dim_ + r])));
        return worst;
    }

    void to_dense() {
        if (!diagonal_) return;
        std::vector<cplx> full(dim_ * dim_, cplx{});
        for (std::size_t i = 0; i < dim_; ++i) full[i * dim_ + i] = data_[i];
        data_ = std::move(full);
        diagonal_ = false;
    }

    /// Marginal probability that the qubits under `mask` read `value`.
    double marginal_probability(std::uint64_t mask, std::uint64_t value) const {
        double p = 0.0;
        for (std::size_t i = 0; i < dim_; ++i)
            if ((i & mask) == value) p += diag(i);
        return p;
    }

    double prob_qubit_one(int k) const {
        const std::uint64_t m = std::uint64_t{1} << k;
        return marginal_probability(m, m);
    }

    // ---- unitary gates -----------------------------------------------------

    void apply_gate(const GateOp& g) {
        switch (g.kind) {
        case GateKind::X:
            permute([m = bit(g.qubits[0])](std::uint64_t i) { return i ^ m; });
            return;
        case GateKind::CNOT:
            permute([c = bit(g.qubits[0]), t = bit(g.qubits[1])](std::uint64_t i) {
                return (i & c) ? i ^ t : i;
            });
            return;
        case GateKind::TOFFOLI:
            permute([c1 = bit(g.qubits[0]), c2 = bit(g.qubits[1]),
                     t = bit(g.qubits[2])](std::uint64_t i) {
                return (i & c1) && (i & c2) ? i ^ t : i;
            });
            return;
        case GateKind::H:
            apply_hadamard(g.qubits[0]);
            return;
        case GateKind::T:
            apply_phase_gate(g.qubits[0], cplx{std::sqrt(0.5), std::sqrt(0.5)});
            return;
        case GateKind::TDG:
            apply_phase_gate(g.qubits[0], cplx{std::sqrt(0.5), -std::sqrt(0.5)});
            return;
        }
    }

    // ---- closed-form channel passes (single sweep, in place) ---------------

    /// off-diagonals in qubit k shrink by sqrt(1-lam); diagonals exact.
    void apply_phase_damping(int k, double lam) {
        if (diagonal_) return;
        scale_coherences(k, std::sqrt(1.0 - lam));
    }

    void apply_amplitude_damping(int k, double gamma) { damp(k, gamma, 1.0); }

    /// relaxation and dephasing fused: populations damp by gamma, coherences
    /// by sqrt(1-gamma)*sqrt(1-lam)
    void apply_thermal(int k, double gamma, double lam) {
        damp(k, gamma, std::sqrt(1.0 - lam));
    }

    void apply_bitflip(int k, double p) {
        const std::uint64_t m = bit(k);
        const double w = 1.0 - p;
        if (diagonal_) {
            for_pairs(m, [&](std::size_t i0) {
                const std::size_t i1 = i0 | m;
                const cplx a = data_[i0], b = data_[i1];
                data_[i0] = w * a + p * b;
                data_[i1] = w * b + p * a;
            });
            return;
        }
        for_quads(m, [&](std::size_t rc00, std::size_t rc01, std::size_t rc10,
                         std::size_t rc11) {
            const cplx a = data_[rc00], b = data_[rc01], c = data_[rc10], d = data_[rc11];
            data_[rc00] = w * a + p * d;
            data_[rc11] = w * d + p * a;
            data_[rc01] = w * b + p * c;
            data_[rc10] = w * c + p * b;
        });
    }

    /// correlated flip: X on both qubits together with probability p
    void apply_bitflip_joint(int k1, int k2, double p) {
        const std::uint64_t m = bit(k1) | bit(k2);
        const double w = 1.0 - p;
        if (diagonal_) {
            for (std::size_t i = 0; i < dim_; ++i) {
                const std::size_t j = i ^ m;
                if (j <= i) continue;
                const cplx a = data_[i], b = data_[j];
                data_[i] = w * a + p * b;
                data_[j] = w * b + p * a;
            }
            return;
        }
        for (std::size_t r = 0; r < dim_; ++r) {
            const std::size_t pr = r ^ m;
            for (std::size_t c = 0; c < dim_; ++c) {
                const std::size_t pc = c ^ m;
                if (pr < r || (pr == r && pc <= c)) continue;
                cplx& x = data_[r * dim_ + c];
                cplx& y = data_[pr * dim_ + pc];
                const cplx a = x, b = y;
                x = w * a + p * b;
                y = w * b + p * a;
            }
        }
    }

    /// one-qubit depolarizing: with probability p replace qubit k by I/2
    void apply_depolarizing1(int k, double p) {
        const std::uint64_t m = bit(k);
        const double w = 1.0 - p;
        if (diagonal_) {
            for_pairs(m, [&](std::size_t i0) {
                const std::size_t i1 = i0 | m;
                const cplx mean = 0.5 * (data_[i0] + data_[i1]);
                data_[i0] = w * data_[i0] + p * mean;
                data_[i1] = w * data_[i1] + p * mean;
            });
            return;
        }
        for_quads(m, [&](std::size_t rc00, std::size_t rc01, std::size_t rc10,
                         std::size_t rc11) {
            const cplx mean = 0.5 * (data_[rc00] + data_[rc11]);
            data_[rc00] = w * data_[rc00] + p * mean;
            data_[rc11] = w * data_[rc11] + p * mean;
            data_[rc01] *= w;
            data_[rc10] *= w;
        });
    }

    /// two-qubit depolarizing: with probability p replace the pair by I/4
    void apply_depolarizing2(int k1, int k2, double p) {
        const std::uint64_t m1 = bit(k1), m2 = bit(k2);
        const double w = 1.0 - p;
        if (diagonal_) {
            for_pairs2(m1, m2, [&](std::size_t base) {
                const std::size_t idx[4] = {base, base | m1, base | m2, base | m1 | m2};
                cplx sum{};
                for (std::size_t u : idx) sum += data_[u];
                const cplx mean = 0.25 * sum;
                for (std::size_t u : idx) data_[u] = w * data_[u] + p * mean;
            });
            return;
        }
        // row/column sub-indices run over the four basis states of the pair
        std::vector<std::size_t> rows, cols;
        for_pairs2(m1, m2, [&](std::size_t r_base) { rows.push_back(r_base); });
        const std::uint64_t sub[4] = {0, m1, m2, m1 | m2};
        for (std::size_t r_base : rows) {
            for_pairs2(m1, m2, [&](std::size_t c_base) {
                cplx diag_sum{};
                for (std::uint64_t s : sub) diag_sum += data_[(r_base | s) * dim_ + (c_base | s)];
                const cplx mean = 0.25 * diag_sum;
                for (std::uint64_t sr : sub)
                    for (std::uint64_t sc : sub) {
                        cplx& v = data_[(r_base | sr) * dim_ + (c_base | sc)];
                        v = (sr == sc) ? w * v + p * mean : w * v;
                    }
            });
        }
    }

    // ---- generic Kraus application -----------------------------------------

    /// rho -> sum_i K_i rho K_i^dagger on the given qubits. General path used
    /// by tests and custom channels; the benchmark presets go through the
    /// closed-form passes above, which this must agree with exactly. For
    /// two-qubit operators, bit 0 of the small-matrix basis index is the
    /// first listed qubit.
    void apply_channel(const KrausChannel& ch, const std::vector<int>& qubits) {
        if (static_cast<int>(qubits.size()) != ch.arity)
            throw std::invalid_argument("channel arity does not match qubit list");
        for (int k : qubits)
            if (k < 0 || k >= q_) throw std::out_of_range("channel qubit outside register");
        to_dense();
        std::vector<cplx> out(dim_ * dim_, cplx{});
        std::vector<cplx> tmp(dim_ * dim_);
        for (const SmallMat& kop : ch.ops) {
            left_apply(kop, qubits, data_, tmp);
            accumulate_right_dagger(kop, qubits, tmp, out);
        }
        data_ = std::move(out);
    }

    double max_abs_diff(const DensityMatrix& o) const {
        double worst = 0.0;
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c)
                worst = std::max(worst, std::abs(at(r, c) - o.at(r, c)));
        return worst;
    }

  private:
    explicit DensityMatrix(int q) : q_(q), dim_(std::size_t{1} << q) {
        if (q < 1 || q > 13) throw std::invalid_argument("qubit count out of range");
    }

    static std::uint64_t bit(int k) { return std::uint64_t{1} << k; }

    // iterate indices with bit m clear
    template <typename Fn>
    void for_pairs(std::uint64_t m, Fn&& fn) const {
        const std::size_t block = m;
        for (std::size_t hi = 0; hi < dim_; hi += block << 1)
            for (std::size_t lo = 0; lo < block; ++lo) fn(hi | lo);
    }

    // iterate indices with both bits clear (m1 != m2)
    template <typename Fn>
    void for_pairs2(std::uint64_t m1, std::uint64_t m2, Fn&& fn) const {
        for (std::size_t i = 0; i < dim_; ++i)
            if (!(i & m1) && !(i & m2)) fn(i);
    }

    // dense: iterate the 2x2 sub-blocks of qubit m over every (row, col) pair
    template <typename Fn>
    void for_quads(std::uint64_t m, Fn&& fn) {
        for_pairs(m, [&](std::size_t r0) {
            const std::size_t r1 = r0 | m;
            const std::size_t row0 = r0 * dim_, row1 = r1 * dim_;
            for_pairs(m, [&](std::size_t c0) {
                const std::size_t c1 = c0 | m;
                fn(row0 + c0, row0 + c1, row1 + c0, row1 + c1);
            });
        });
    }

    template <typename Perm>
    void permute(Perm&& perm) {
        if (diagonal_) {
            for (std::size_t i = 0; i < dim_; ++i) {
                const std::uint64_t pi = perm(i);
                if (pi > i) std::swap(data_[i], data_[pi]);
            }
            return;
        }
        for (std::size_t r = 0; r < dim_; ++r) {
            const std::uint64_t pr = perm(r);
            for (std::size_t c = 0; c < dim_; ++c) {
                const std::uint64_t pc = perm(c);
                if (pr > r || (pr == r && pc > c))
                    std::swap(data_[r * dim_ + c], data_[pr * dim_ + pc]);
            }
        }
    }

    void apply_hadamard(int k) {
        to_dense();
        const std::uint64_t m = bit(k);
        for_quads(m, [&](std::size_t rc00, std::size_t rc01, std::size_t rc10,
                         std::size_t rc11) {
            const cplx a = data_[rc00], b = data_[rc01], c = data_[rc10], d = data_[rc11];
            data_[rc00] = 0.5 * (a + b + c + d);
            data_[rc01] = 0.5 * (a - b + c - d);
            data_[rc10] = 0.5 * (a + b - c - d);
            data_[rc11] = 0.5 * (a - b - c + d);
        });
    }

    void apply_phase_gate(int k, cplx phase) {
        if (diagonal_) return;  // diagonal states are fixed points of Z-phases
        const std::uint64_t m = bit(k);
        const cplx conj_phase = std::conj(phase);
        for (std::size_t r = 0; r < dim_; ++r) {
            const bool br = r & m;
            for (std::size_t c = 0; c < dim_; ++c) {
                const bool bc = c & m;
                if (br == bc) continue;
                data_[r * dim_ + c] *= br ? phase : conj_phase;
            }
        }
    }

    void scale_coherences(int k, double f) {
        const std::uint64_t m = bit(k);
        for (std::size_t r = 0; r < dim_; ++r) {
            const bool br = r & m;
            cplx* row = data_.data() + r * dim_;
            for (std::size_t c = 0; c < dim_; ++c)
                if (br != static_cast<bool>(c & m)) row[c] *= f;
        }
    }

    // population transfer 1->0 with probability gamma; coherences get
    // sqrt(1-gamma) times an extra dephasing factor
    void damp(int k, double gamma, double extra_coherence) {
        const std::uint64_t m = bit(k);
        const double keep = 1.0 - gamma;
        if (diagonal_) {
            for_pairs(m, [&](std::size_t i0) {
                const std::size_t i1 = i0 | m;
                data_[i0] += gamma * data_[i1];
                data_[i1] *= keep;
            });
            return;
        }
        const double coh = std::sqrt(keep) * extra_coherence;
        for_quads(m, [&](std::size_t rc00, std::size_t rc01, std::size_t rc10,
                         std::size_t rc11) {
            data_[rc00] += gamma * data_[rc11];
            data_[rc11] *= keep;
            data_[rc01] *= coh;
            data_[rc10] *= coh;
        });
    }

    void left_apply(const SmallMat& kop, const std::vector<int>& qubits,
                    const std::vector<cplx>& src, std::vector<cplx>& dst) const {
        const int a = ch_arity(kop);
        const std::uint64_t sub[4] = {0,
                                      bit(qubits[0]),
                                      a == 2 ? bit(qubits[1]) : 0,
                                      a == 2 ? bit(qubits[0]) | bit(qubits[1]) : 0};
        const int states = 1 << a;
        std::fill(dst.begin(), dst.end(), cplx{});
        for (std::size_t rb = 0; rb < dim_; ++rb) {
            if ((rb & (sub[1] | (a == 2 ? sub[2] : 0))) != 0) continue;  // base rows only
            for (int rs = 0; rs < states; ++rs) {
                const std::size_t r = rb | pick(sub, rs, a);
                cplx* drow = dst.data() + r * dim_;
                for (int ss = 0; ss < states; ++ss) {
                    const cplx kv = kop.at(rs, ss);
                    if (kv == cplx{}) continue;
                    const cplx* srow = src.data() + (rb | pick(sub, ss, a)) * dim_;
                    for (std::size_t c = 0; c < dim_; ++c) drow[c] += kv * srow[c];
                }
            }
        }
    }

    void accumulate_right_dagger(const SmallMat& kop, const std::vector<int>& qubits,
                                 const std::vector<cplx>& src, std::vector<cplx>& out) const {
        const int a = ch_arity(kop);
        const std::uint64_t sub[4] = {0,
                                      bit(qubits[0]),
                                      a == 2 ? bit(qubits[1]) : 0,
                                      a == 2 ? bit(qubits[0]) | bit(qubits[1]) : 0};
        const int states = 1 << a;
        for (std::size_t r = 0; r < dim_; ++r) {
            const cplx* srow = src.data() + r * dim_;
            cplx* orow = out.data() + r * dim_;
            for (std::size_t cb = 0; cb < dim_; ++cb) {
                if ((cb & (sub[1] | (a == 2 ? sub[2] : 0))) != 0) continue;
                for (int cs = 0; cs < states; ++cs) {
                    const std::size_t c = cb | pick(sub, cs, a);
                    cplx acc{};
                    for (int ts = 0; ts < states; ++ts) {
                        const cplx kv = kop.at(cs, ts);
                        if (kv == cplx{}) continue;
                        acc += srow[cb | pick(sub, ts, a)] * std::conj(kv);
                    }
                    orow[c] += acc;
                }
            }
        }
    }

    static int ch_arity(const SmallMat& k) { return k.dim == 2 ? 1 : 2; }

    static std::uint64_t pick(const std::uint64_t sub[4], int state, int arity) {
        if (arity == 1) return state ? sub[1] : 0;
        std::uint64_t m = 0;
        if (state & 1) m |= sub[1];
        if (state & 2) m |= sub[2];
        return m;
    }

    int q_;
    std::size_t dim_;
    bool diagonal_ = true;
    std::vector<cplx> data_;
};

/// prepare_basis: the pure-state projector of a computational basis string.
inline DensityMatrix prepare_basis(int q, std::string_view bitstring) {
    return DensityMatrix::from_bitstring(q, bitstring);
}

}  // namespace qadder
