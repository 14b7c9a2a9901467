// Copyright 2026 The qadder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qadder/circuit.hpp"

namespace qadder {

/// The three exact ripple-carry baselines and the five approximate designs.
/// CQA0/CQA1 are the MAJ/UMA ripple construction (without / with carry-out),
/// TPL13 is the optimized ripple adder with no input carry. AQA1/AQA2 drop
/// the carry entirely; AQA3/AQA4/AQA5 approximate it from the MSB inputs.
enum class AdderFamily : std::uint8_t { CQA0, CQA1, TPL13, AQA1, AQA2, AQA3, AQA4, AQA5 };

constexpr std::string_view family_name(AdderFamily f) {
    switch (f) {
    case AdderFamily::CQA0: return "cqa0";
    case AdderFamily::CQA1: return "cqa1";
    case AdderFamily::TPL13: return "tpl13";
    case AdderFamily::AQA1: return "aqa1";
    case AdderFamily::AQA2: return "aqa2";
    case AdderFamily::AQA3: return "aqa3";
    case AdderFamily::AQA4: return "aqa4";
    case AdderFamily::AQA5: return "aqa5";
    }
    return "?";
}

inline AdderFamily parse_family(std::string_view s) {
    for (AdderFamily f : {AdderFamily::CQA0, AdderFamily::CQA1, AdderFamily::TPL13,
                          AdderFamily::AQA1, AdderFamily::AQA2, AdderFamily::AQA3,
                          AdderFamily::AQA4, AdderFamily::AQA5})
        if (s == family_name(f)) return f;
    throw std::invalid_argument("unknown adder family: " + std::string(s));
}

struct AdderSpec {
    AdderFamily family = AdderFamily::CQA0;
    int n = 1;

    AdderSpec() = default;
    AdderSpec(AdderFamily f, int width) : family(f), n(width) {
        if (n < 1) throw std::invalid_argument("adder bit width must be >= 1");
    }

    bool has_cout() const {
        return family != AdderFamily::CQA0 && family != AdderFamily::AQA1 &&
               family != AdderFamily::AQA2;
    }
    bool has_cin() const {
        return family == AdderFamily::CQA0 || family == AdderFamily::CQA1;
    }
    int num_qubits() const {
        switch (family) {
        case AdderFamily::CQA0: return 2 * n + 1;   // a, b, cin
        case AdderFamily::CQA1: return 2 * n + 2;   // a, b, cin, z
        case AdderFamily::TPL13: return 2 * n + 1;  // a, b, z
        case AdderFamily::AQA5: return 2 * n + 1;   // a, b, cout
        default: return 2 * n;                      // a, b
        }
    }
};

namespace detail {

// Common register layout: a on [0, n), b on [n, 2n), extras above.
inline Roles base_roles(const AdderSpec& s) {
    Roles r;
    for (int i = 0; i < s.n; ++i) r.a.push_back(i);
    for (int i = 0; i < s.n; ++i) r.b.push_back(s.n + i);
    return r;
}

// MAJ block of the ripple construction: (c, b, a) -> (c^a, b^a, maj(a,b,c)).
inline void emit_maj(Circuit& c, int carry, int b, int a) {
    c.append(GateOp::cnot(a, b));
    c.append(GateOp::cnot(a, carry));
    c.append(GateOp::toffoli(carry, b, a));
}

// UMA block (2-CNOT variant): restores a and c, leaves the sum bit on b.
inline void emit_uma(Circuit& c, int carry, int b, int a) {
    c.append(GateOp::toffoli(carry, b, a));
    c.append(GateOp::cnot(a, carry));
    c.append(GateOp::cnot(carry, b));
}

inline Circuit build_maj_uma_ripple(const AdderSpec& s, bool with_cout) {
    Roles r = base_roles(s);
    const int cin = 2 * s.n;
    const int z = 2 * s.n + 1;
    r.cin = {cin};
    r.sum = r.b;
    if (with_cout) r.cout = {z};
    Circuit c(s.num_qubits(), r);
    auto carry_in = [&](int i) { return i == 0 ? cin : i - 1; };  // a[i-1] holds c_i
    for (int i = 0; i < s.n; ++i) emit_maj(c, carry_in(i), s.n + i, i);
    if (with_cout) c.append(GateOp::cnot(s.n - 1, z));
    for (int i = s.n - 1; i >= 0; --i) emit_uma(c, carry_in(i), s.n + i, i);
    return c;
}

// Ripple adder with no input carry. Forward: fold a into b, thread the a
// register into a carry chain, then Toffoli the carries upward and into z.
// Backward: peel the chain off while emitting sum bits.
inline Circuit build_tpl13(const AdderSpec& s) {
    Roles r = base_roles(s);
    const int n = s.n;
    const int z = 2 * n;
    r.sum = r.b;
    r.cout = {z};
    Circuit c(s.num_qubits(), r);
    auto a = [&](int i) { return i; };
    auto b = [&](int i) { return n + i; };
    if (n == 1) {
        // Degenerate width: the carry needs a Toffoli, the sum one CNOT.
        c.append(GateOp::toffoli(a(0), b(0), z));
        c.append(GateOp::cnot(a(0), b(0)));
        return c;
    }
    for (int i = 1; i < n; ++i) c.append(GateOp::cnot(a(i), b(i)));
    c.append(GateOp::cnot(a(n - 1), z));
    for (int i = n - 2; i >= 1; --i) c.append(GateOp::cnot(a(i), a(i + 1)));
    for (int i = 0; i <= n - 2; ++i) c.append(GateOp::toffoli(b(i), a(i), a(i + 1)));
    c.append(GateOp::toffoli(b(n - 1), a(n - 1), z));
    for (int i = n - 1; i >= 1; --i) {
        c.append(GateOp::cnot(a(i), b(i)));
        c.append(GateOp::toffoli(b(i - 1), a(i - 1), a(i)));
    }
    for (int i = 1; i <= n - 2; ++i) c.append(GateOp::cnot(a(i), a(i + 1)));
    for (int i = n - 1; i >= 1; --i) c.append(GateOp::cnot(a(i), b(i)));
    c.append(GateOp::cnot(a(0), b(0)));
    return c;
}

}  // namespace detail

/// Generates the gate-level circuit for a family/width. Register layout is
/// always a then b (LSB first) with any extra qubits above; the role map
/// marks where sum and carry-out land.
inline Circuit build(const AdderSpec& s) {
    using detail::base_roles;
    const int n = s.n;
    switch (s.family) {
    case AdderFamily::CQA0: return detail::build_maj_uma_ripple(s, false);
    case AdderFamily::CQA1: return detail::build_maj_uma_ripple(s, true);
    case AdderFamily::TPL13: return detail::build_tpl13(s);
    case AdderFamily::AQA1: {
        Roles r = base_roles(s);
        r.sum = r.a;  // pure pass-through, no gates
        return Circuit(s.num_qubits(), r);
    }
    case AdderFamily::AQA2: {
        Roles r = base_roles(s);
        r.sum = r.b;
        Circuit c(s.num_qubits(), r);
        for (int i = 0; i < n; ++i) c.append(GateOp::cnot(i, n + i));
        return c;
    }
    case AdderFamily::AQA3: {
        Roles r = base_roles(s);
        r.sum = r.a;
        r.cout = {2 * n - 1};  // b's MSB doubles as the carry
        return Circuit(s.num_qubits(), r);
    }
    case AdderFamily::AQA4: {
        // The MSB CNOT is reversed so b's MSB survives as the carry-out.
        Roles r = base_roles(s);
        for (int i = 0; i < n - 1; ++i) r.sum.push_back(n + i);
        r.sum.push_back(n - 1);
        r.cout = {2 * n - 1};
        Circuit c(s.num_qubits(), r);
        for (int i = 0; i < n - 1; ++i) c.append(GateOp::cnot(i, n + i));
        c.append(GateOp::cnot(2 * n - 1, n - 1));
        return c;
    }
    case AdderFamily::AQA5: {
        Roles r = base_roles(s);
        r.sum = r.b;
        r.cout = {2 * n};
        Circuit c(s.num_qubits(), r);
        // Carry first: the Toffoli must read b's MSB before it is overwritten.
        c.append(GateOp::toffoli(n - 1, 2 * n - 1, 2 * n));
        for (int i = 0; i < n; ++i) c.append(GateOp::cnot(i, n + i));
        return c;
    }
    }
    throw std::logic_error("unreachable");
}

/// The family's arithmetic on classical operands: sum value plus 2^n times
/// the carry bit for carry families, the n-bit sum value otherwise.
inline std::uint64_t eval_classical(const AdderSpec& s, std::uint64_t a, std::uint64_t b,
                                    int cin = 0) {
    const std::uint64_t lim = std::uint64_t{1} << s.n;
    if (a >= lim || b >= lim)
        throw std::out_of_range("operand exceeds adder width");
    if (cin != 0 && cin != 1)
        throw std::invalid_argument("cin must be 0 or 1");
    if (cin == 1 && !s.has_cin())
        throw std::invalid_argument("family has no carry-in qubit");
    const std::uint64_t msb_a = (a >> (s.n - 1)) & 1;
    const std::uint64_t msb_b = (b >> (s.n - 1)) & 1;
    switch (s.family) {
    case AdderFamily::CQA0: return (a + b + static_cast<std::uint64_t>(cin)) & (lim - 1);
    case AdderFamily::CQA1: return a + b + static_cast<std::uint64_t>(cin);
    case AdderFamily::TPL13: return a + b;
    case AdderFamily::AQA1: return a;
    case AdderFamily::AQA2: return a ^ b;
    case AdderFamily::AQA3: return a + (msb_b << s.n);
    case AdderFamily::AQA4: return (a ^ b) + (msb_b << s.n);
    case AdderFamily::AQA5: return (a ^ b) + ((msb_a & msb_b) << s.n);
    }
    throw std::logic_error("unreachable");
}

/// Runs a circuit of classical reversible gates (X/CNOT/Toffoli) on a basis
/// state given as a bitmask (bit k = qubit k). This is the brute-force
/// oracle behind verify_semantics and the simulation-based metrics route.
inline std::uint64_t simulate_basis(const Circuit& c, std::uint64_t bits) {
    for (const GateOp& g : c.gates()) {
        switch (g.kind) {
        case GateKind::X:
            bits ^= std::uint64_t{1} << g.qubits[0];
            break;
        case GateKind::CNOT:
            if (bits >> g.qubits[0] & 1) bits ^= std::uint64_t{1} << g.qubits[1];
            break;
        case GateKind::TOFFOLI:
            if ((bits >> g.qubits[0] & 1) && (bits >> g.qubits[1] & 1))
                bits ^= std::uint64_t{1} << g.qubits[2];
            break;
        default:
            throw std::invalid_argument("simulate_basis: non-classical gate");
        }
    }
    return bits;
}

namespace detail {

inline std::uint64_t place_bits(const std::vector<int>& qubits, std::uint64_t value) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i)
        if (value >> i & 1) bits |= std::uint64_t{1} << qubits[i];
    return bits;
}

inline std::uint64_t extract_bits(const std::vector<int>& qubits, std::uint64_t bits) {
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i)
        if (bits >> qubits[i] & 1) value |= std::uint64_t{1} << i;
    return value;
}

inline std::uint64_t input_mask(const Circuit& c, std::uint64_t a, std::uint64_t b, int cin) {
    std::uint64_t bits = place_bits(c.roles().a, a) | place_bits(c.roles().b, b);
    if (cin && !c.roles().cin.empty()) bits |= std::uint64_t{1} << c.roles().cin[0];
    return bits;
}

// Documented whole-register final state: outputs on their role qubits, every
// other qubit passed through unchanged.
inline std::uint64_t expected_final_bits(const AdderSpec& s, const Circuit& c,
                                         std::uint64_t a, std::uint64_t b, int cin) {
    const std::uint64_t lim = std::uint64_t{1} << s.n;
    const std::uint64_t out = eval_classical(s, a, b, cin);
    const std::uint64_t sum = out & (lim - 1);
    const std::uint64_t carry = out >> s.n;
    const Roles& r = c.roles();
    switch (s.family) {
    case AdderFamily::CQA0:
        return place_bits(r.a, a) | place_bits(r.b, sum) |
               (cin ? std::uint64_t{1} << r.cin[0] : 0);
    case AdderFamily::CQA1:
        return place_bits(r.a, a) | place_bits(r.b, sum) |
               (cin ? std::uint64_t{1} << r.cin[0] : 0) | place_bits(r.cout, carry);
    case AdderFamily::TPL13:
        return place_bits(r.a, a) | place_bits(r.b, sum) | place_bits(r.cout, carry);
    case AdderFamily::AQA1:
    case AdderFamily::AQA3:
        return place_bits(r.a, a) | place_bits(r.b, b);
    case AdderFamily::AQA2:
        return place_bits(r.a, a) | place_bits(r.b, a ^ b);
    case AdderFamily::AQA4: {
        // sum bits sit on b[0..n-2] and a[n-1]; a[0..n-2] and b[n-1] pass through
        std::uint64_t bits = place_bits(r.sum, sum) | place_bits(r.cout, carry);
        for (int i = 0; i < s.n - 1; ++i)
            if (a >> i & 1) bits |= std::uint64_t{1} << r.a[i];
        return bits;
    }
    case AdderFamily::AQA5:
        return place_bits(r.a, a) | place_bits(r.b, a ^ b) | place_bits(r.cout, carry);
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

/// Exhaustive check that the generated circuit reproduces eval_classical on
/// the sum/cout roles and leaves every pass-through qubit in its documented
/// state, over all basis inputs (and both cin values where the family has a
/// carry-in).
inline bool verify_semantics(const AdderSpec& s) {
    if (s.n > 6) throw std::invalid_argument("verify_semantics: width too large");
    const Circuit c = build(s);
    const std::uint64_t lim = std::uint64_t{1} << s.n;
    const int cin_max = s.has_cin() ? 1 : 0;
    for (std::uint64_t a = 0; a < lim; ++a)
        for (std::uint64_t b = 0; b < lim; ++b)
            for (int cin = 0; cin <= cin_max; ++cin) {
                const std::uint64_t in = detail::input_mask(c, a, b, cin);
                const std::uint64_t fin = simulate_basis(c, in);
                if (fin != detail::expected_final_bits(s, c, a, b, cin)) return false;
                const std::uint64_t want = eval_classical(s, a, b, cin);
                std::uint64_t got = detail::extract_bits(c.roles().sum, fin);
                if (s.has_cout())
                    got |= detail::extract_bits(c.roles().cout, fin) << s.n;
                if (got != want) return false;
            }
    return true;
}

}  // namespace qadder
