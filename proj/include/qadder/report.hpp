// Copyright 2026 The qadder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "qadder/metrics.hpp"
#include "qadder/simulate.hpp"

namespace qadder {

enum class OutputFormat : std::uint8_t { Csv, Markdown, Plot };

inline OutputFormat parse_format(std::string_view s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "md") return OutputFormat::Markdown;
    if (s == "plot") return OutputFormat::Plot;
    throw std::invalid_argument("format must be csv, md or plot");
}

/// Improvement of one candidate over one baseline under one noise model.
struct ComparisonRow {
    NoiseKind noise = NoiseKind::None;
    AdderFamily baseline = AdderFamily::CQA0;
    AdderFamily candidate = AdderFamily::AQA1;
    double baseline_fidelity = 0.0;
    double candidate_fidelity = 0.0;
    double improvement_pct = 0.0;  // 100 * (candidate - baseline) / baseline
};

/// One structural row of the design-characteristics table, with the closed
/// forms alongside the generated values so deviations are visible in the
/// output itself.
struct StructuralRow {
    AdderFamily family = AdderFamily::CQA0;
    int n = 1;
    long long qubits = 0, cnot_depth = 0, toffoli_depth = 0, cnot_count = 0,
              toffoli_count = 0;
    long long want_qubits = 0, want_cnot_depth = 0, want_toffoli_depth = 0,
              want_cnot_count = 0, want_toffoli_count = 0;
    std::string note;  // nonempty when a generated value deviates from its formula
};

namespace detail {

inline std::string fmt4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string csv() const {
        std::ostringstream out;
        join(out, header, ",");
        for (const auto& r : rows) join(out, r, ",");
        return out.str();
    }

    std::string markdown() const {
        std::ostringstream out;
        out << "|";
        for (const auto& h : header) out << ' ' << h << " |";
        out << "\n|";
        for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
        out << "\n";
        for (const auto& r : rows) {
            out << "|";
            for (const auto& v : r) out << ' ' << v << " |";
            out << "\n";
        }
        return out.str();
    }

    std::string plot() const {
        std::ostringstream out;
        out << "#";
        for (const auto& h : header) out << ' ' << h;
        out << "\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) out << ' ';
                out << (r[i].empty() ? "-" : r[i]);
            }
            out << "\n";
        }
        return out.str();
    }

    std::string render(OutputFormat f) const {
        switch (f) {
        case OutputFormat::Csv: return csv();
        case OutputFormat::Markdown: return markdown();
        case OutputFormat::Plot: return plot();
        }
        return {};
    }

  private:
    static void join(std::ostringstream& out, const std::vector<std::string>& vs,
                     const char* sep) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) out << sep;
            out << vs[i];
        }
        out << "\n";
    }
};

}  // namespace detail

inline std::string render_metrics(const std::vector<MetricsReport>& rows, OutputFormat f) {
    detail::Table t;
    t.header = {"family", "n", "med", "nmed", "error_rate", "s_max", "N"};
    for (const MetricsReport& r : rows)
        t.rows.push_back({std::string(family_name(r.family)), std::to_string(r.n),
                          r.med.str(4), r.nmed.str(4), r.error_rate.str(4),
                          std::to_string(r.s_max), std::to_string(r.total_inputs)});
    return t.render(f);
}

inline std::string render_fidelity(const std::vector<FidelityReport>& rows, OutputFormat f) {
    detail::Table t;
    t.header = {"family", "n",        "noise",     "avg_success",
                "toffoli_policy", "idle_mode", "apply_to_prep"};
    for (const FidelityReport& r : rows)
        t.rows.push_back({std::string(family_name(r.family)), std::to_string(r.n),
                          std::string(noise_name(r.noise)), detail::fmt4(r.avg_success),
                          std::string(policy_name(r.toffoli_policy)),
                          r.idle_mode ? "on" : "off", r.apply_to_prep ? "on" : "off"});
    return t.render(f);
}

inline std::string render_compare(const std::vector<ComparisonRow>& rows, OutputFormat f) {
    detail::Table t;
    t.header = {"noise",          "baseline",           "candidate",
                "baseline_fidelity", "candidate_fidelity", "improvement_pct"};
    for (const ComparisonRow& r : rows)
        t.rows.push_back({std::string(noise_name(r.noise)),
                          std::string(family_name(r.baseline)),
                          std::string(family_name(r.candidate)),
                          detail::fmt4(r.baseline_fidelity),
                          detail::fmt4(r.candidate_fidelity),
                          detail::fmt4(r.improvement_pct)});
    return t.render(f);
}

inline std::string render_structural(const std::vector<StructuralRow>& rows, OutputFormat f) {
    detail::Table t;
    t.header = {"family",        "n",          "qubits",        "cnot_depth",
                "toffoli_depth", "cnot_count", "toffoli_count", "expected_qubits",
                "expected_cnot_depth", "expected_toffoli_depth", "expected_cnot_count",
                "expected_toffoli_count", "note"};
    for (const StructuralRow& r : rows)
        t.rows.push_back({std::string(family_name(r.family)), std::to_string(r.n),
                          std::to_string(r.qubits), std::to_string(r.cnot_depth),
                          std::to_string(r.toffoli_depth), std::to_string(r.cnot_count),
                          std::to_string(r.toffoli_count), std::to_string(r.want_qubits),
                          std::to_string(r.want_cnot_depth),
                          std::to_string(r.want_toffoli_depth),
                          std::to_string(r.want_cnot_count),
                          std::to_string(r.want_toffoli_count), r.note});
    return t.render(f);
}

}  // namespace qadder
