// Copyright 2026 The qadder Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "qadder/bench.hpp"

namespace {

using namespace qadder;

struct CommonOpts {
    std::string config_path;
    std::string preset_name;
    std::string out_dir;
    std::string format = "csv";
    std::string toffoli_policy;
    std::string idle;
    std::string families_csv;
    std::string noises_csv;
    std::vector<int> widths;
    long long seed = 0;  // reserved; exact expectation mode ignores it
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON experiment config");
    cmd->add_option("--preset", o.preset_name,
                    "named preset: paper-table2|paper-table3|paper-table4|paper-table5|"
                    "paper-fig4-6");
    cmd->add_option("--out", o.out_dir, "output directory (stdout when omitted)");
    cmd->add_option("--format", o.format, "csv|md|plot")->default_str("csv");
    cmd->add_option("--toffoli-policy", o.toffoli_policy, "native|decompose");
    cmd->add_option("--idle", o.idle, "on|off idle-interval relaxation");
    cmd->add_option("--families", o.families_csv, "comma list, e.g. cqa0,aqa1");
    cmd->add_option("--n", o.widths, "bit widths");
    cmd->add_option("--seed", o.seed, "reserved (unused in exact mode)");
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

ExperimentConfig resolve(const CommonOpts& o) {
    ExperimentConfig c;
    if (!o.preset_name.empty() && !o.config_path.empty())
        throw ConfigError("give either --preset or --config, not both");
    if (!o.preset_name.empty()) c = preset(o.preset_name);
    if (!o.config_path.empty()) c = load_config_file(o.config_path);
    if (!o.families_csv.empty()) {
        c.families.clear();
        for (const std::string& f : split_csv(o.families_csv))
            c.families.push_back(parse_family(f));
    }
    if (!o.widths.empty()) c.widths = o.widths;
    if (!o.noises_csv.empty()) {
        c.noises.clear();
        for (const std::string& s : split_csv(o.noises_csv)) c.noises.push_back(parse_noise(s));
    }
    if (!o.toffoli_policy.empty()) c.base.toffoli_policy = parse_policy(o.toffoli_policy);
    if (!o.idle.empty()) {
        if (o.idle != "on" && o.idle != "off") throw ConfigError("--idle takes on|off");
        c.base.idle_mode = o.idle == "on";
    }
    return c;
}

void deliver(const std::string& text, const CommonOpts& o, const std::string& stem) {
    if (o.out_dir.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::create_directories(o.out_dir);
    const char* ext = o.format == "md" ? ".md" : o.format == "plot" ? ".dat" : ".csv";
    const std::string path = o.out_dir + "/" + stem + ext;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << text;
    std::cerr << "wrote " << path << "\n";
}

void report_thermal_scale(const ExperimentConfig& c) {
    for (NoiseKind k : c.noises)
        if (k == NoiseKind::Thermal) {
            const NoiseModel m = c.model_for(NoiseKind::Thermal);
            std::cerr << "thermal calibration: time_scale=" << m.time_scale
                      << " (x/h/phase " << m.durations_ns.x << "/" << m.durations_ns.h
                      << "/" << m.durations_ns.phase << " ns, cnot " << m.durations_ns.cnot
                      << " ns, toffoli " << m.durations_ns.toffoli << " ns, measure "
                      << m.durations_ns.measure << " ns)\n";
            return;
        }
}

int dispatch(const std::string& sub, const CommonOpts& o, const std::string& build_family,
             int build_n) {
    ExperimentConfig c = resolve(o);
    const OutputFormat fmt = parse_format(o.format);
    if (sub == "metrics") {
        if (c.families.empty()) c = preset("paper-fig4-6");
        deliver(render_metrics(cmd_metrics(c), fmt), o, "metrics");
    } else if (sub == "noise-sweep") {
        report_thermal_scale(c);
        deliver(render_fidelity(cmd_noise_sweep(c), fmt), o, "noise_sweep");
    } else if (sub == "compare") {
        report_thermal_scale(c);
        deliver(render_compare(cmd_compare(c), fmt), o, "compare");
    } else if (sub == "build") {
        if (!build_family.empty()) {
            deliver(cmd_build(parse_family(build_family), build_n), o, "circuit");
        } else if (c.build_family) {
            deliver(cmd_build(*c.build_family, c.build_n), o, "circuit");
        } else {
            // structural table over the selected families/widths
            if (c.families.empty()) c = preset("paper-table2");
            deliver(render_structural(cmd_structural(c), fmt), o, "structure");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate quantum adder noise laboratory"};
    app.require_subcommand(1);

    CommonOpts metrics_o, sweep_o, compare_o, build_o;
    std::string baseline, build_family;
    int build_n = 4;

    CLI::App* metrics = app.add_subcommand("metrics", "brute-force error metrics (NMED, ER)");
    add_common(metrics, metrics_o);

    CLI::App* sweep = app.add_subcommand("noise-sweep", "density-matrix fidelity sweep");
    add_common(sweep, sweep_o);
    sweep->add_option("--noises", sweep_o.noises_csv, "comma list of noise models");

    CLI::App* compare = app.add_subcommand("compare", "improvement vs a baseline adder");
    add_common(compare, compare_o);
    compare->add_option("--noises", compare_o.noises_csv, "comma list of noise models");
    compare->add_option("--baseline", baseline, "baseline family");

    CLI::App* build_cmd = app.add_subcommand("build", "emit QASM or the structure table");
    add_common(build_cmd, build_o);
    build_cmd->add_option("--family", build_family, "adder family for QASM output");
    build_cmd->add_option("--bits", build_n, "bit width for QASM output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (metrics->parsed()) return dispatch("metrics", metrics_o, "", 0);
        if (sweep->parsed()) return dispatch("noise-sweep", sweep_o, "", 0);
        if (compare->parsed()) {
            ExperimentConfig c = resolve(compare_o);
            if (!baseline.empty()) c.baselines = {parse_family(baseline)};
            report_thermal_scale(c);
            deliver(render_compare(cmd_compare(c), parse_format(compare_o.format)),
                    compare_o, "compare");
            return 0;
        }
        if (build_cmd->parsed()) return dispatch("build", build_o, build_family, build_n);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
