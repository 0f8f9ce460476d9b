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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rcam/calibration.hpp"
#include "rcam/geometry.hpp"
#include "rcam/memory_model.hpp"
#include "rcam/resource_model.hpp"
#include "rcam/trace.hpp"
#include "rcam/update_engines.hpp"

namespace rcam {

inline constexpr const char* kVersion = "0.3.0";
inline constexpr const char* kReportSchema = "rcamsim.report/1";

// ---------------------------------------------------------------------------
// Payloads

/// Word `index` of the payload for `seed`. Seed 0 is the smoke payload
/// (index mod 2^W); any other seed hashes (seed, index) with SplitMix64, so
/// each word can be produced independently of the others.
std::uint64_t payload_word(std::uint64_t seed, std::size_t index, std::size_t word_width);

UpdatePayload generate_payload(std::uint64_t seed, const CamGeometry& geometry);
UpdatePayload generate_payload(std::uint64_t seed, std::size_t depth, std::size_t word_width);

class PayloadError : public std::runtime_error {
  public:
    enum class Kind { Unreadable, TooShort, TooLong };

    PayloadError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

/// Raw binary, N * W / 8 bytes, each word little-endian in index order.
UpdatePayload load_payload(const std::filesystem::path& path, std::size_t depth, std::size_t word_width);
void save_payload(const std::filesystem::path& path, const UpdatePayload& payload);

// ---------------------------------------------------------------------------
// Experiments

struct ExperimentConfig {
    std::vector<Architecture> architectures{Architecture::S1, Architecture::S2, Architecture::S3};
    std::size_t depth = 65536;
    std::size_t word_width = 8;
    std::size_t partitions = 8;
    BusModel bus;
    std::uint64_t seed = 1;
    std::optional<std::string> payload_path;
    std::size_t search_keys = 1000;
    bool verify = true;
    bool s1_prefetch = false;
    /// Efficiencies the bus model is scored against in every report.
    CalibrationTargets targets = reference_targets();

    /// Throws ConfigError/GeometryError describing the first problem.
    void validate() const;

    nlohmann::ordered_json to_json() const;
    /// Missing keys keep their defaults; unknown keys are rejected.
    static ExperimentConfig from_json(const nlohmann::json& doc);
};

struct ArchitectureResult {
    Architecture architecture = Architecture::S1;
    std::size_t depth = 0;
    std::size_t word_width = 0;
    Cycle total_cycles = 0;
    std::size_t bus_read_cycles = 0;
    std::size_t stall_cycles = 0;
    CycleSpan erase_span;
    CycleSpan write_span;
    Cycle catch_up_cycles = 0;
    double throughput_gbps = 0.0;
    std::size_t keys_verified = 0;
    ResourceReport resources;
};

struct EfficiencyReport {
    ExperimentConfig config;
    /// Non-empty for width sweeps.
    std::vector<std::size_t> sweep_widths;
    double theoretical_gbps = 0.0;
    std::vector<ArchitectureResult> results;
    std::optional<CalibrationResult> calibration;

    double io_efficiency(const ArchitectureResult& r) const { return r.throughput_gbps / theoretical_gbps; }
    const ArchitectureResult* find(Architecture arch, std::size_t word_width) const;
    /// Throughput of `a` over `b` at the same width, if both were run.
    std::optional<double> ratio(Architecture a, Architecture b, std::size_t word_width) const;
};

/// Update throughput in Gbit/s for a whole-table update of `total_cycles`.
double update_throughput_gbps(std::size_t depth, std::size_t word_width, Cycle total_cycles,
                              const BusModel& bus);

/// Runs every selected architecture on the configured payload. When
/// `config.verify` is set, every engine is checked against the reference
/// CAM and any divergence throws InvariantError. Traces go to `trace_out`
/// when given.
EfficiencyReport run_experiment(const ExperimentConfig& config, std::ostream* trace_out = nullptr);

/// The width sweep behind the memory/efficiency figures: every
/// architecture at every width with N * W held at config.depth *
/// config.word_width. Results are ordered by (width, architecture).
EfficiencyReport run_sweep(const ExperimentConfig& config, const std::vector<std::size_t>& widths);

struct VerifySummary {
    std::size_t iterations = 0;
    std::size_t updates = 0;
    std::size_t searches = 0;
    std::size_t divergences = 0;
    std::vector<std::string> failures;
};

/// Oracle fuzzing: `iterations` rounds, each drawing a fresh seed, running
/// two back-to-back updates on every architecture and checking `keys`
/// searches after each.
VerifySummary run_verify(const ExperimentConfig& config, std::size_t iterations);

// ---------------------------------------------------------------------------
// Reports

enum class ReportFormat { Json, Csv };
ReportFormat parse_report_format(std::string_view name);

nlohmann::ordered_json report_to_json(const EfficiencyReport& report);
EfficiencyReport report_from_json(const nlohmann::json& doc);
nlohmann::ordered_json calibration_to_json(const CalibrationResult& result);
nlohmann::ordered_json bus_to_json(const BusModel& bus);

/// One row per (architecture, width), fixed column order.
void write_csv(std::ostream& out, const EfficiencyReport& report);
void emit_report(const EfficiencyReport& report, ReportFormat format, std::ostream& out);

} // namespace rcam
