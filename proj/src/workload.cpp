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

#include "rcam/workload.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>

#include "rcam/errors.hpp"
#include "rcam/oracle.hpp"

namespace rcam {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t mask_for(std::size_t width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Search keys for verification: alternately a stored word (a guaranteed
/// hit) and an arbitrary value (usually a miss).
std::vector<std::uint64_t> verification_keys(std::uint64_t seed, const UpdatePayload& payload, std::size_t count) {
    std::vector<std::uint64_t> keys(count);
    const std::uint64_t stream = mix64(seed ^ 0x6b65797374726561ull);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t r = mix64(stream + (i + 1) * kGolden);
        keys[i] = (i % 2 == 0) ? payload.words[r % payload.words.size()] : r & mask_for(payload.word_width);
    }
    return keys;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::ordered_json span_to_json(const CycleSpan& span) {
    if (span.empty()) return nullptr;
    return nlohmann::ordered_json::array({span.first, span.last});
}

CycleSpan span_from_json(const nlohmann::json& j) {
    if (j.is_null()) return {};
    return {j.at(0).get<Cycle>(), j.at(1).get<Cycle>()};
}

nlohmann::ordered_json optional_to_json(const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::optional<double> optional_from_json(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

BusModel bus_from_json(const nlohmann::json& j) {
    static const std::set<std::string> known{"mode",          "bus_width",  "clock_mhz", "stream_efficiency",
                                             "burst_overhead_cycles", "burst_length"};
    for (const auto& [key, _] : j.items())
        if (!known.contains(key)) throw ConfigError("unknown bus key '" + key + "'");
    BusModel bus;
    if (j.contains("mode")) bus.mode = parse_bus_mode(j.at("mode").get<std::string>());
    if (j.contains("bus_width")) bus.bus_width_b = j.at("bus_width").get<std::size_t>();
    if (j.contains("clock_mhz")) bus.clock_mhz = j.at("clock_mhz").get<double>();
    if (j.contains("stream_efficiency")) bus.stream_efficiency = j.at("stream_efficiency").get<double>();
    if (j.contains("burst_overhead_cycles")) bus.burst_overhead_cycles = j.at("burst_overhead_cycles").get<double>();
    if (j.contains("burst_length")) bus.burst_length = j.at("burst_length").get<std::size_t>();
    return bus;
}

nlohmann::ordered_json targets_to_json(const CalibrationTargets& t) {
    nlohmann::ordered_json j;
    j["s1"] = optional_to_json(t.s1);
    j["s2"] = optional_to_json(t.s2);
    j["s3"] = optional_to_json(t.s3);
    return j;
}

CalibrationResult calibration_from_json(const nlohmann::json& j) {
    CalibrationResult r;
    r.bus = bus_from_json(j.at("bus"));
    for (auto [name, eff, res] : {std::tuple{"s1", &r.s1_efficiency, &r.s1_residual},
                                  std::tuple{"s2", &r.s2_efficiency, &r.s2_residual},
                                  std::tuple{"s3", &r.s3_efficiency, &r.s3_residual}}) {
        if (!j.contains(name) || j.at(name).is_null()) continue;
        *eff = j.at(name).at("achieved").get<double>();
        *res = j.at(name).at("residual").get<double>();
    }
    r.max_relative_error = j.at("max_relative_error").get<double>();
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// Payloads

std::uint64_t payload_word(std::uint64_t seed, std::size_t index, std::size_t word_width) {
    const std::uint64_t mask = mask_for(word_width);
    if (seed == 0) return static_cast<std::uint64_t>(index) & mask;
    return mix64(mix64(seed) + (static_cast<std::uint64_t>(index) + 1) * kGolden) & mask;
}

UpdatePayload generate_payload(std::uint64_t seed, std::size_t depth, std::size_t word_width) {
    UpdatePayload p{word_width, std::vector<std::uint64_t>(depth)};
    for (std::size_t i = 0; i < depth; ++i) p.words[i] = payload_word(seed, i, word_width);
    return p;
}

UpdatePayload generate_payload(std::uint64_t seed, const CamGeometry& geometry) {
    return generate_payload(seed, geometry.depth(), geometry.word_width());
}

UpdatePayload load_payload(const std::filesystem::path& path, std::size_t depth, std::size_t word_width) {
    if (word_width == 0 || word_width % 8 != 0 || word_width > 64)
        throw GeometryError("payload word width must be a multiple of 8 in [8, 64]");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PayloadError(PayloadError::Kind::Unreadable, "cannot read payload file " + path.string());
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw PayloadError(PayloadError::Kind::Unreadable, "error while reading " + path.string());

    const std::size_t bytes_per_word = word_width / 8;
    const std::size_t expected = depth * bytes_per_word;
    if (bytes.size() < expected)
        throw PayloadError(PayloadError::Kind::TooShort, path.string() + " holds " + std::to_string(bytes.size()) +
                                                             " bytes, expected " + std::to_string(expected));
    if (bytes.size() > expected)
        throw PayloadError(PayloadError::Kind::TooLong, path.string() + " holds " + std::to_string(bytes.size()) +
                                                            " bytes, expected " + std::to_string(expected));

    UpdatePayload p{word_width, std::vector<std::uint64_t>(depth)};
    for (std::size_t i = 0; i < depth; ++i) {
        std::uint64_t w = 0;
        for (std::size_t b = 0; b < bytes_per_word; ++b)
            w |= std::uint64_t{bytes[i * bytes_per_word + b]} << (8 * b);
        p.words[i] = w;
    }
    return p;
}

void save_payload(const std::filesystem::path& path, const UpdatePayload& payload) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw PayloadError(PayloadError::Kind::Unreadable, "cannot write payload file " + path.string());
    const std::size_t bytes_per_word = payload.word_width / 8;
    std::vector<char> bytes(payload.words.size() * bytes_per_word);
    for (std::size_t i = 0; i < payload.words.size(); ++i)
        for (std::size_t b = 0; b < bytes_per_word; ++b)
            bytes[i * bytes_per_word + b] = static_cast<char>((payload.words[i] >> (8 * b)) & 0xFFu);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw PayloadError(PayloadError::Kind::Unreadable, "error while writing " + path.string());
}

// ---------------------------------------------------------------------------
// Configuration

void ExperimentConfig::validate() const {
    if (architectures.empty()) throw ConfigError("no architecture selected");
    std::set<Architecture> seen(architectures.begin(), architectures.end());
    if (seen.size() != architectures.size()) throw ConfigError("architecture listed twice");
    bus.validate();
    if (depth % kRcuSlots != 0) throw ConfigError("depth must be a multiple of 32 (RCU slots)");
    for (auto arch : architectures) CamGeometry::make(arch, depth, word_width, bus.bus_width_b, partitions);
    for (const auto& t : {targets.s1, targets.s2, targets.s3})
        if (t && !(*t > 0.0 && *t <= 1.0)) throw ConfigError("efficiency targets must lie in (0, 1]");
}

nlohmann::ordered_json bus_to_json(const BusModel& bus) {
    nlohmann::ordered_json j;
    j["mode"] = std::string(to_string(bus.mode));
    j["bus_width"] = bus.bus_width_b;
    j["clock_mhz"] = bus.clock_mhz;
    j["stream_efficiency"] = bus.stream_efficiency;
    j["burst_overhead_cycles"] = bus.burst_overhead_cycles;
    j["burst_length"] = bus.burst_length;
    return j;
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
    nlohmann::ordered_json j;
    auto archs = nlohmann::ordered_json::array();
    for (auto a : architectures) archs.push_back(std::string(to_string(a)));
    j["architectures"] = archs;
    j["depth"] = depth;
    j["word_width"] = word_width;
    j["partitions"] = partitions;
    j["bus"] = bus_to_json(bus);
    j["seed"] = seed;
    j["payload"] = payload_path ? nlohmann::ordered_json(*payload_path) : nlohmann::ordered_json(nullptr);
    j["search_keys"] = search_keys;
    j["verify"] = verify;
    j["s1_prefetch"] = s1_prefetch;
    j["targets"] = targets_to_json(targets);
    return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& doc) {
    static const std::set<std::string> known{"architectures", "depth",  "word_width", "partitions",
                                             "bus",           "seed",   "payload",    "search_keys",
                                             "verify",        "s1_prefetch", "targets"};
    if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
    for (const auto& [key, _] : doc.items())
        if (!known.contains(key)) throw ConfigError("unknown configuration key '" + key + "'");

    ExperimentConfig c;
    try {
        if (doc.contains("architectures")) {
            c.architectures.clear();
            for (const auto& a : doc.at("architectures")) c.architectures.push_back(parse_architecture(a.get<std::string>()));
        }
        if (doc.contains("depth")) c.depth = doc.at("depth").get<std::size_t>();
        if (doc.contains("word_width")) c.word_width = doc.at("word_width").get<std::size_t>();
        if (doc.contains("partitions")) c.partitions = doc.at("partitions").get<std::size_t>();
        if (doc.contains("bus")) c.bus = bus_from_json(doc.at("bus"));
        if (doc.contains("seed")) c.seed = doc.at("seed").get<std::uint64_t>();
        if (doc.contains("payload") && !doc.at("payload").is_null()) c.payload_path = doc.at("payload").get<std::string>();
        if (doc.contains("search_keys")) c.search_keys = doc.at("search_keys").get<std::size_t>();
        if (doc.contains("verify")) c.verify = doc.at("verify").get<bool>();
        if (doc.contains("s1_prefetch")) c.s1_prefetch = doc.at("s1_prefetch").get<bool>();
        if (doc.contains("targets")) {
            const auto& t = doc.at("targets");
            c.targets = {optional_from_json(t, "s1"), optional_from_json(t, "s2"), optional_from_json(t, "s3")};
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed configuration: ") + e.what());
    }
    return c;
}

// ---------------------------------------------------------------------------
// Experiments

double update_throughput_gbps(std::size_t depth, std::size_t word_width, Cycle total_cycles, const BusModel& bus) {
    if (total_cycles <= 0) throw InvariantError("update finished in a non-positive number of cycles");
    const double bits = static_cast<double>(depth) * static_cast<double>(word_width);
    const double seconds = static_cast<double>(total_cycles) / (bus.clock_mhz * 1e6);
    return bits / seconds / 1e9;
}

const ArchitectureResult* EfficiencyReport::find(Architecture arch, std::size_t word_width) const {
    for (const auto& r : results)
        if (r.architecture == arch && r.word_width == word_width) return &r;
    return nullptr;
}

std::optional<double> EfficiencyReport::ratio(Architecture a, Architecture b, std::size_t word_width) const {
    const auto* ra = find(a, word_width);
    const auto* rb = find(b, word_width);
    if (!ra || !rb) return std::nullopt;
    return ra->throughput_gbps / rb->throughput_gbps;
}

EfficiencyReport run_experiment(const ExperimentConfig& config, std::ostream* trace_out) {
    config.validate();

    const UpdatePayload payload = config.payload_path
                                      ? load_payload(*config.payload_path, config.depth, config.word_width)
                                      : generate_payload(config.seed, config.depth, config.word_width);
    std::optional<ReferenceCam> reference;
    std::vector<std::uint64_t> keys;
    if (config.verify) {
        reference.emplace(config.depth, config.word_width);
        reference->load(payload);
        keys = verification_keys(config.seed, payload, config.search_keys);
    }

    std::vector<Architecture> archs = config.architectures;
    std::sort(archs.begin(), archs.end());

    EfficiencyReport report;
    report.config = config;
    report.theoretical_gbps = config.bus.theoretical_gbps();

    for (Architecture arch : archs) {
        const auto geometry =
            CamGeometry::make(arch, config.depth, config.word_width, config.bus.bus_width_b, config.partitions);
        EngineOptions options;
        options.record_events = trace_out != nullptr;
        options.s1_prefetch = config.s1_prefetch;
        auto engine = UpdateEngine::create(geometry, config.bus, options);
        const UpdateTrace& trace = engine->update(payload);
        if (trace_out) trace.write_jsonl(*trace_out);

        ArchitectureResult r;
        r.architecture = arch;
        r.depth = config.depth;
        r.word_width = config.word_width;
        r.total_cycles = trace.total_cycles;
        r.bus_read_cycles = trace.bus_read_cycles;
        r.stall_cycles = trace.stall_cycles;
        r.erase_span = trace.erase_span;
        r.write_span = trace.write_span;
        r.catch_up_cycles = trace.catch_up_cycles;
        r.throughput_gbps = update_throughput_gbps(config.depth, config.word_width, trace.total_cycles, config.bus);
        r.resources = m10k_count(arch, config.depth, config.word_width);

        if (reference) {
            const auto verdict = equivalence_check(*engine, *reference, keys);
            if (!verdict.pass)
                throw InvariantError(geometry.describe() + " diverged from the reference CAM: " + verdict.describe());
            r.keys_verified = verdict.keys_checked;
        }
        report.results.push_back(r);
    }

    if (config.targets.s1 || config.targets.s2 || config.targets.s3) {
        CalibrationPoints points;
        points.partitions = config.partitions;
        report.calibration = evaluate_calibration(config.bus, config.targets, points);
    }
    return report;
}

EfficiencyReport run_sweep(const ExperimentConfig& config, const std::vector<std::size_t>& widths) {
    if (widths.empty()) throw ConfigError("sweep needs at least one width");
    if (config.payload_path) throw ConfigError("a sweep generates its own payloads; drop the payload path");
    std::vector<std::size_t> sorted = widths;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ConfigError("sweep width listed twice");

    const std::size_t table_bits = config.depth * config.word_width;
    EfficiencyReport report;
    report.config = config;
    report.sweep_widths = sorted;
    report.theoretical_gbps = config.bus.theoretical_gbps();

    for (std::size_t w : sorted) {
        if (w == 0 || table_bits % w != 0) throw ConfigError("width " + std::to_string(w) + " does not divide the table");
        ExperimentConfig point = config;
        point.word_width = w;
        point.depth = table_bits / w;
        point.targets = {};
        auto part = run_experiment(point);
        for (auto& r : part.results) report.results.push_back(r);
    }
    if (config.targets.s1 || config.targets.s2 || config.targets.s3) {
        CalibrationPoints points;
        points.partitions = config.partitions;
        report.calibration = evaluate_calibration(config.bus, config.targets, points);
    }
    return report;
}

VerifySummary run_verify(const ExperimentConfig& config, std::size_t iterations) {
    config.validate();
    VerifySummary summary;
    std::vector<Architecture> archs = config.architectures;
    std::sort(archs.begin(), archs.end());

    for (std::size_t it = 0; it < iterations; ++it) {
        const std::uint64_t round_seed = mix64(config.seed + it * kGolden) | 1u;
        for (Architecture arch : archs) {
            const auto geometry =
                CamGeometry::make(arch, config.depth, config.word_width, config.bus.bus_width_b, config.partitions);
            EngineOptions options;
            options.record_events = false;
            options.s1_prefetch = config.s1_prefetch;
            auto engine = UpdateEngine::create(geometry, config.bus, options);
            ReferenceCam reference(config.depth, config.word_width);
            for (std::uint64_t pass = 0; pass < 2; ++pass) {
                const auto payload = generate_payload(round_seed + pass, geometry);
                engine->update(payload);
                reference.load(payload);
                ++summary.updates;
                const auto keys = verification_keys(round_seed + pass, payload, config.search_keys);
                const auto verdict = equivalence_check(*engine, reference, keys);
                summary.searches += verdict.keys_checked;
                if (!verdict.pass) {
                    ++summary.divergences;
                    summary.failures.push_back(geometry.describe() + " seed " + std::to_string(round_seed + pass) +
                                               ": " + verdict.describe());
                }
            }
        }
        ++summary.iterations;
    }
    return summary;
}

// ---------------------------------------------------------------------------
// Reports

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw ConfigError("unknown report format '" + std::string(name) + "'");
}

nlohmann::ordered_json calibration_to_json(const CalibrationResult& result) {
    nlohmann::ordered_json j;
    j["bus"] = bus_to_json(result.bus);
    for (auto [name, eff, res] : {std::tuple{"s1", &result.s1_efficiency, &result.s1_residual},
                                  std::tuple{"s2", &result.s2_efficiency, &result.s2_residual},
                                  std::tuple{"s3", &result.s3_efficiency, &result.s3_residual}}) {
        if (!*eff) {
            j[name] = nullptr;
            continue;
        }
        nlohmann::ordered_json e;
        e["achieved"] = **eff;
        e["residual"] = **res;
        j[name] = e;
    }
    j["max_relative_error"] = result.max_relative_error;
    return j;
}

nlohmann::ordered_json report_to_json(const EfficiencyReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["config"] = report.config.to_json();
    j["sweep_widths"] = report.sweep_widths;
    j["theoretical_gbps"] = report.theoretical_gbps;

    auto results = nlohmann::ordered_json::array();
    std::set<std::size_t> widths;
    for (const auto& r : report.results) {
        nlohmann::ordered_json e;
        e["architecture"] = std::string(to_string(r.architecture));
        e["depth"] = r.depth;
        e["word_width"] = r.word_width;
        e["total_cycles"] = r.total_cycles;
        e["bus_read_cycles"] = r.bus_read_cycles;
        e["stall_cycles"] = r.stall_cycles;
        e["erase_span"] = span_to_json(r.erase_span);
        e["write_span"] = span_to_json(r.write_span);
        e["catch_up_cycles"] = r.catch_up_cycles;
        e["throughput_gbps"] = r.throughput_gbps;
        e["io_efficiency"] = report.io_efficiency(r);
        e["keys_verified"] = r.keys_verified;
        nlohmann::ordered_json res;
        res["rcu_blocks"] = r.resources.rcu_blocks;
        res["erase_blocks"] = r.resources.erase_blocks;
        res["total_m10k"] = r.resources.total_m10k;
        res["device_fraction"] = r.resources.device_fraction;
        res["erase_utilization"] = r.resources.erase_utilization;
        res["saving_vs_s1"] = r.resources.saving_vs_s1;
        e["resources"] = res;
        results.push_back(e);
        widths.insert(r.word_width);
    }
    j["results"] = results;

    auto ratios = nlohmann::ordered_json::array();
    for (std::size_t w : widths) {
        nlohmann::ordered_json e;
        e["word_width"] = w;
        e["s2_over_s1"] = optional_to_json(report.ratio(Architecture::S2, Architecture::S1, w));
        e["s3_over_s1"] = optional_to_json(report.ratio(Architecture::S3, Architecture::S1, w));
        e["s3_over_s2"] = optional_to_json(report.ratio(Architecture::S3, Architecture::S2, w));
        ratios.push_back(e);
    }
    j["ratios"] = ratios;
    j["calibration"] = report.calibration ? calibration_to_json(*report.calibration) : nlohmann::ordered_json(nullptr);
    return j;
}

EfficiencyReport report_from_json(const nlohmann::json& doc) {
    if (doc.value("schema", std::string{}) != kReportSchema)
        throw ConfigError("unsupported report schema '" + doc.value("schema", std::string{}) + "'");
    EfficiencyReport report;
    report.config = ExperimentConfig::from_json(doc.at("config"));
    report.sweep_widths = doc.at("sweep_widths").get<std::vector<std::size_t>>();
    report.theoretical_gbps = doc.at("theoretical_gbps").get<double>();
    for (const auto& e : doc.at("results")) {
        ArchitectureResult r;
        r.architecture = parse_architecture(e.at("architecture").get<std::string>());
        r.depth = e.at("depth").get<std::size_t>();
        r.word_width = e.at("word_width").get<std::size_t>();
        r.total_cycles = e.at("total_cycles").get<Cycle>();
        r.bus_read_cycles = e.at("bus_read_cycles").get<std::size_t>();
        r.stall_cycles = e.at("stall_cycles").get<std::size_t>();
        r.erase_span = span_from_json(e.at("erase_span"));
        r.write_span = span_from_json(e.at("write_span"));
        r.catch_up_cycles = e.at("catch_up_cycles").get<Cycle>();
        r.throughput_gbps = e.at("throughput_gbps").get<double>();
        r.keys_verified = e.at("keys_verified").get<std::size_t>();
        const auto& res = e.at("resources");
        r.resources.architecture = r.architecture;
        r.resources.depth = r.depth;
        r.resources.word_width = r.word_width;
        r.resources.rcu_blocks = res.at("rcu_blocks").get<std::size_t>();
        r.resources.erase_blocks = res.at("erase_blocks").get<std::size_t>();
        r.resources.total_m10k = res.at("total_m10k").get<std::size_t>();
        r.resources.device_fraction = res.at("device_fraction").get<double>();
        r.resources.erase_utilization = res.at("erase_utilization").get<double>();
        r.resources.saving_vs_s1 = res.at("saving_vs_s1").get<double>();
        report.results.push_back(r);
    }
    if (!doc.at("calibration").is_null()) report.calibration = calibration_from_json(doc.at("calibration"));
    return report;
}

void write_csv(std::ostream& out, const EfficiencyReport& report) {
    out << "architecture,depth,word_width,total_cycles,bus_read_cycles,stall_cycles,erase_first,erase_last,"
           "write_first,write_last,catch_up_cycles,throughput_gbps,io_efficiency,keys_verified,rcu_blocks,"
           "erase_blocks,total_m10k,device_fraction,saving_vs_s1\n";
    for (const auto& r : report.results) {
        out << to_string(r.architecture) << ',' << r.depth << ',' << r.word_width << ',' << r.total_cycles << ','
            << r.bus_read_cycles << ',' << r.stall_cycles << ',' << r.erase_span.first << ',' << r.erase_span.last
            << ',' << r.write_span.first << ',' << r.write_span.last << ',' << r.catch_up_cycles << ','
            << format_double(r.throughput_gbps) << ',' << format_double(report.io_efficiency(r)) << ','
            << r.keys_verified << ',' << r.resources.rcu_blocks << ',' << r.resources.erase_blocks << ','
            << r.resources.total_m10k << ',' << format_double(r.resources.device_fraction) << ','
            << format_double(r.resources.saving_vs_s1) << '\n';
    }
}

void emit_report(const EfficiencyReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::Json)
        out << report_to_json(report).dump(2) << '\n';
    else
        write_csv(out, report);
    if (!out) throw std::runtime_error("failed to write report");
}

} // namespace rcam
