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
#include <span>
#include <string_view>
#include <vector>

namespace rcam {

using Cycle = std::int64_t;

enum class BusMode { Ideal, Calibrated };

std::string_view to_string(BusMode mode);
BusMode parse_bus_mode(std::string_view name);

/// Parametric external-memory timing. Two knobs describe a real DDR
/// system: the fraction of peak bandwidth sustained by long sequential
/// streams, and a fixed stall paid by each discrete (on-demand) burst.
/// Ideal mode ignores both knobs.
struct BusModel {
    std::size_t bus_width_b = 256;
    double clock_mhz = 100.0;
    double stream_efficiency = 1.0;
    double burst_overhead_cycles = 0.0;
    std::size_t burst_length = 1;
    BusMode mode = BusMode::Ideal;

    static BusModel ideal(std::size_t bus_width = 256);
    static BusModel calibrated(double stream_efficiency, double burst_overhead_cycles,
                               std::size_t bus_width = 256);

    /// Throws ConfigError on out-of-range knobs.
    void validate() const;

    /// Peak bandwidth in Gbit/s (bus width x clock).
    double theoretical_gbps() const;

    double effective_stream_efficiency() const;
    double effective_burst_overhead() const;

    /// Knobs in fixed point; all schedule arithmetic is integral so traces
    /// are reproducible across platforms.
    std::int64_t stream_efficiency_ppm() const;
    std::int64_t burst_overhead_milli() const;

    friend bool operator==(const BusModel&, const BusModel&) = default;
};

/// Availability cycle of each beat of a continuous read stream. Beat i is
/// available at ceil((i + 1) / eta) - 1, so stalls are spread evenly and
/// the whole stream spans ceil(count / eta) cycles.
std::vector<Cycle> stream_schedule(const BusModel& bus, std::size_t beat_count);

/// Incremental form of `discrete_schedule` for engines that decide each
/// request cycle from the previous availability.
class DiscreteBus {
  public:
    explicit DiscreteBus(const BusModel& bus);

    /// Availability of the next request issued at `request`. Requests must
    /// be strictly increasing.
    Cycle issue(Cycle request);

    std::size_t issued() const { return issued_; }

  private:
    std::int64_t overhead_milli_;
    std::size_t burst_length_;
    std::size_t issued_ = 0;
    std::size_t bursts_ = 0;
    Cycle last_request_ = 0;
    Cycle last_available_ = 0;
};

/// availability(i) = max(request(i), availability(i-1)) + 1 + overhead(i).
/// The fractional overhead is distributed with an error accumulator; it is
/// charged once per burst of `burst_length` requests.
std::vector<Cycle> discrete_schedule(const BusModel& bus, std::span<const Cycle> request_cycles);

} // namespace rcam
