/*
 * Copyright 2026 The rcamsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// rcamsim: command-line front end.
//
//   rcamsim run       one experiment (selected architectures, one geometry)
//   rcamsim sweep     every architecture across word widths at fixed table size
//   rcamsim verify    oracle fuzzing with an iteration budget
//   rcamsim calibrate fit the bus model to measured efficiencies
//   rcamsim payload   write a generated payload file
//
// Exit codes: 0 success, 1 invariant failure, 2 bad configuration or I/O.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcam/calibration.hpp"
#include "rcam/errors.hpp"
#include "rcam/workload.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string arch = "all";
    std::optional<std::size_t> depth;
    std::optional<std::size_t> width;
    std::optional<std::size_t> partitions;
    std::optional<std::size_t> bus_width;
    std::optional<std::string> bus_mode;
    std::optional<double> eta;
    std::optional<double> burst_overhead;
    std::optional<std::size_t> burst_length;
    std::optional<double> clock_mhz;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> payload;
    std::optional<std::size_t> keys;
    std::string out;
    std::string format = "json";
    std::string trace;
    bool no_verify = false;
    bool prefetch = false;

    std::vector<std::size_t> widths{8, 16, 32, 64};
    std::size_t iterations = 10;
    std::optional<double> target_s1;
    std::optional<double> target_s2;
    std::optional<double> target_s3;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--config", o.config_path, "JSON configuration file; flags override it");
    cmd->add_option("--arch", o.arch, "s1, s2, s3, a comma list, or all");
    cmd->add_option("--depth", o.depth, "CAM depth N (words)");
    cmd->add_option("--width", o.width, "CAM word width W (bits)");
    cmd->add_option("--partitions", o.partitions, "erase RAM partitions for S3");
    cmd->add_option("--bus-width", o.bus_width, "external bus width B (bits)");
    cmd->add_option("--bus", o.bus_mode, "ideal or calibrated")->check(CLI::IsMember({"ideal", "calibrated"}));
    cmd->add_option("--eta", o.eta, "stream efficiency in (0, 1]");
    cmd->add_option("--burst-overhead", o.burst_overhead, "stall cycles per discrete burst");
    cmd->add_option("--burst-length", o.burst_length, "beats per discrete burst");
    cmd->add_option("--clock-mhz", o.clock_mhz, "bus clock in MHz");
    cmd->add_option("--seed", o.seed, "payload seed (0 = smoke payload)");
    cmd->add_option("--keys", o.keys, "verification searches per engine");
    cmd->add_flag("--prefetch", o.prefetch, "S1 fetches one beat ahead");
}

void add_output(CLI::App* cmd, Options& o) {
    cmd->add_option("--out", o.out, "output file (default stdout)");
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

void add_targets(CLI::App* cmd, Options& o) {
    cmd->add_option("--target-s1", o.target_s1, "S1 efficiency target (W=64)");
    cmd->add_option("--target-s2", o.target_s2, "S2 efficiency target");
    cmd->add_option("--target-s3", o.target_s3, "S3 efficiency target");
}

std::vector<rcam::Architecture> parse_archs(const std::string& list) {
    if (list == "all") return {rcam::Architecture::S1, rcam::Architecture::S2, rcam::Architecture::S3};
    std::vector<rcam::Architecture> out;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(rcam::parse_architecture(item));
    return out;
}

/// Config file first, then flags. Returns true when the bus knobs were set
/// explicitly somewhere.
bool build_config(const Options& o, rcam::ExperimentConfig& c, const CLI::App& cmd) {
    bool knobs_given = false;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw rcam::ConfigError("cannot read config file " + o.config_path);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw rcam::ConfigError("config file " + o.config_path + ": " + e.what());
        }
        c = rcam::ExperimentConfig::from_json(doc);
        if (doc.contains("bus") &&
            (doc["bus"].contains("stream_efficiency") || doc["bus"].contains("burst_overhead_cycles")))
            knobs_given = true;
    }
    if (cmd.count("--arch") > 0 || o.config_path.empty()) c.architectures = parse_archs(o.arch);
    if (o.depth) c.depth = *o.depth;
    if (o.width) c.word_width = *o.width;
    if (o.partitions) c.partitions = *o.partitions;
    if (o.bus_width) c.bus.bus_width_b = *o.bus_width;
    if (o.bus_mode) c.bus.mode = rcam::parse_bus_mode(*o.bus_mode);
    if (o.eta) {
        c.bus.stream_efficiency = *o.eta;
        knobs_given = true;
    }
    if (o.burst_overhead) {
        c.bus.burst_overhead_cycles = *o.burst_overhead;
        knobs_given = true;
    }
    if (o.burst_length) c.bus.burst_length = *o.burst_length;
    if (o.clock_mhz) c.bus.clock_mhz = *o.clock_mhz;
    if (o.seed) c.seed = *o.seed;
    if (o.payload) c.payload_path = *o.payload;
    if (o.keys) c.search_keys = *o.keys;
    if (o.no_verify) c.verify = false;
    if (o.prefetch) c.s1_prefetch = true;
    if (o.target_s1) c.targets.s1 = *o.target_s1;
    if (o.target_s2) c.targets.s2 = *o.target_s2;
    if (o.target_s3) c.targets.s3 = *o.target_s3;
    return knobs_given;
}

/// A calibrated bus without explicit knobs is fitted to the configured
/// targets before use.
std::optional<rcam::CalibrationResult> resolve_bus(rcam::ExperimentConfig& c, bool knobs_given) {
    if (c.bus.mode != rcam::BusMode::Calibrated || knobs_given) return std::nullopt;
    rcam::CalibrationPoints points;
    points.partitions = c.partitions;
    auto fit = rcam::calibrate(c.bus, c.targets, {}, points);
    c.bus = fit.bus;
    return fit;
}

template <typename Fn>
void with_output(const Options& o, Fn&& fn) {
    if (o.out.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(o.out, std::ios::trunc);
    if (!out) throw rcam::ConfigError("cannot write " + o.out);
    fn(out);
}

void print_calibration(std::ostream& err, const rcam::CalibrationResult& r) {
    err << "calibration: eta=" << r.bus.stream_efficiency << " burst_overhead=" << r.bus.burst_overhead_cycles
        << " max_rel_error=" << r.max_relative_error << "\n";
    auto line = [&](const char* name, const std::optional<double>& eff, const std::optional<double>& res) {
        if (eff) err << "  " << name << ": achieved " << *eff << ", residual " << *res << "\n";
    };
    line("S1", r.s1_efficiency, r.s1_residual);
    line("S2", r.s2_efficiency, r.s2_residual);
    line("S3", r.s3_efficiency, r.s3_residual);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cycle-accurate RAM-based binary CAM update simulator"};
    app.set_version_flag("--version", rcam::kVersion);
    app.require_subcommand(1);
    Options o;

    auto* run = app.add_subcommand("run", "Run one experiment");
    add_common(run, o);
    add_output(run, o);
    run->add_option("--payload", o.payload, "raw payload file (N*W/8 bytes, little-endian words)");
    run->add_option("--trace", o.trace, "write line-delimited event traces here");
    run->add_flag("--no-verify", o.no_verify, "skip the reference CAM check");
    add_targets(run, o);

    auto* sweep = app.add_subcommand("sweep", "Width sweep at fixed table size");
    add_common(sweep, o);
    add_output(sweep, o);
    sweep->add_option("--widths", o.widths, "word widths to sweep")->delimiter(',');
    sweep->add_flag("--no-verify", o.no_verify, "skip the reference CAM check");
    add_targets(sweep, o);

    auto* verify = app.add_subcommand("verify", "Fuzz every engine against the reference CAM");
    add_common(verify, o);
    verify->add_option("--iterations", o.iterations, "fuzzing rounds");

    auto* cal = app.add_subcommand("calibrate", "Fit the bus model to target efficiencies");
    add_common(cal, o);
    add_targets(cal, o);
    cal->add_option("--out", o.out, "output file (default stdout)");

    auto* gen = app.add_subcommand("payload", "Write a generated payload file");
    add_common(gen, o);
    gen->add_option("--out", o.out, "payload file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        rcam::ExperimentConfig config;
        const CLI::App& cmd = *app.get_subcommands().front();
        const bool knobs_given = build_config(o, config, cmd);

        if (run->parsed() || sweep->parsed()) {
            auto fit = resolve_bus(config, knobs_given);
            if (fit) print_calibration(std::cerr, *fit);
            rcam::EfficiencyReport report;
            if (run->parsed()) {
                if (o.trace.empty()) {
                    report = rcam::run_experiment(config);
                } else {
                    std::ofstream trace(o.trace, std::ios::trunc);
                    if (!trace) throw rcam::ConfigError("cannot write " + o.trace);
                    report = rcam::run_experiment(config, &trace);
                }
            } else {
                report = rcam::run_sweep(config, o.widths);
            }
            if (fit) report.calibration = *fit;
            const auto format = rcam::parse_report_format(o.format);
            with_output(o, [&](std::ostream& out) { rcam::emit_report(report, format, out); });
            return 0;
        }

        if (verify->parsed()) {
            const auto summary = rcam::run_verify(config, o.iterations);
            std::cout << "iterations " << summary.iterations << ", updates " << summary.updates << ", searches "
                      << summary.searches << ", divergences " << summary.divergences << "\n";
            for (const auto& f : summary.failures) std::cout << "  " << f << "\n";
            return summary.divergences == 0 ? 0 : 1;
        }

        if (cal->parsed()) {
            rcam::CalibrationPoints points;
            points.partitions = config.partitions;
            const auto fit = rcam::calibrate(config.bus, config.targets, {}, points);
            print_calibration(std::cerr, fit);
            with_output(o, [&](std::ostream& out) { out << rcam::calibration_to_json(fit).dump(2) << "\n"; });
            return 0;
        }

        if (gen->parsed()) {
            rcam::save_payload(o.out, rcam::generate_payload(config.seed, config.depth, config.word_width));
            return 0;
        }
    } catch (const rcam::InvariantError& e) {
        std::cerr << "rcamsim: invariant failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "rcamsim: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
