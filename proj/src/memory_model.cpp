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

#include "rcam/memory_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rcam/errors.hpp"

namespace rcam {

std::string_view to_string(BusMode mode) { return mode == BusMode::Ideal ? "ideal" : "calibrated"; }

BusMode parse_bus_mode(std::string_view name) {
    if (name == "ideal") return BusMode::Ideal;
    if (name == "calibrated") return BusMode::Calibrated;
    throw ConfigError("unknown bus mode '" + std::string(name) + "'");
}

BusModel BusModel::ideal(std::size_t bus_width) {
    BusModel bus;
    bus.bus_width_b = bus_width;
    return bus;
}

BusModel BusModel::calibrated(double stream_efficiency, double burst_overhead_cycles, std::size_t bus_width) {
    BusModel bus;
    bus.bus_width_b = bus_width;
    bus.stream_efficiency = stream_efficiency;
    bus.burst_overhead_cycles = burst_overhead_cycles;
    bus.mode = BusMode::Calibrated;
    bus.validate();
    return bus;
}

void BusModel::validate() const {
    if (bus_width_b == 0 || bus_width_b % 64 != 0) throw ConfigError("bus width must be a positive multiple of 64");
    if (!(clock_mhz > 0.0) || !std::isfinite(clock_mhz)) throw ConfigError("clock must be positive");
    if (!(stream_efficiency > 0.0 && stream_efficiency <= 1.0))
        throw ConfigError("stream efficiency must lie in (0, 1]");
    if (!(burst_overhead_cycles >= 0.0) || !std::isfinite(burst_overhead_cycles))
        throw ConfigError("burst overhead must be a non-negative number of cycles");
    if (burst_length == 0) throw ConfigError("burst length must be at least one beat");
    if (stream_efficiency_ppm() == 0) throw ConfigError("stream efficiency below model resolution");
}

double BusModel::theoretical_gbps() const { return static_cast<double>(bus_width_b) * clock_mhz / 1000.0; }

double BusModel::effective_stream_efficiency() const { return mode == BusMode::Ideal ? 1.0 : stream_efficiency; }

double BusModel::effective_burst_overhead() const { return mode == BusMode::Ideal ? 0.0 : burst_overhead_cycles; }

std::int64_t BusModel::stream_efficiency_ppm() const {
    return std::llround(effective_stream_efficiency() * 1'000'000.0);
}

std::int64_t BusModel::burst_overhead_milli() const { return std::llround(effective_burst_overhead() * 1000.0); }

std::vector<Cycle> stream_schedule(const BusModel& bus, std::size_t beat_count) {
    bus.validate();
    const std::int64_t ppm = bus.stream_efficiency_ppm();
    std::vector<Cycle> out(beat_count);
    for (std::size_t i = 0; i < beat_count; ++i) {
        const std::int64_t scaled = static_cast<std::int64_t>(i + 1) * 1'000'000;
        out[i] = (scaled + ppm - 1) / ppm - 1;
    }
    return out;
}

DiscreteBus::DiscreteBus(const BusModel& bus)
    : overhead_milli_(bus.burst_overhead_milli()), burst_length_(bus.burst_length) {
    bus.validate();
}

Cycle DiscreteBus::issue(Cycle request) {
    if (issued_ > 0 && request <= last_request_)
        throw ConfigError("bus requests must be strictly increasing (" + std::to_string(request) +
                          " after " + std::to_string(last_request_) + ")");
    Cycle extra = 0;
    if (issued_ % burst_length_ == 0) {
        const auto b = static_cast<std::int64_t>(bursts_++);
        extra = ((b + 1) * overhead_milli_) / 1000 - (b * overhead_milli_) / 1000;
    }
    const Cycle start = issued_ == 0 ? request : std::max(request, last_available_);
    last_available_ = start + 1 + extra;
    last_request_ = request;
    ++issued_;
    return last_available_;
}

std::vector<Cycle> discrete_schedule(const BusModel& bus, std::span<const Cycle> request_cycles) {
    DiscreteBus fetch(bus);
    std::vector<Cycle> out;
    out.reserve(request_cycles.size());
    for (Cycle r : request_cycles) out.push_back(fetch.issue(r));
    return out;
}

} // namespace rcam
