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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rcam/geometry.hpp"
#include "rcam/memory_model.hpp"

namespace rcam {

enum class EventKind { BeatArrival, Erase, Write, Stall };

std::string_view to_string(EventKind kind);

/// One trace record. For Erase/Write, [first, first + count) is the range
/// of global word indices touched; for BeatArrival, `first` is the beat.
struct TraceEvent {
    Cycle cycle = 0;
    EventKind kind = EventKind::Stall;
    std::int64_t first = 0;
    std::int64_t count = 0;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Inclusive cycle range; empty when first < 0.
struct CycleSpan {
    Cycle first = -1;
    Cycle last = -1;

    bool empty() const { return first < 0; }
    Cycle length() const { return empty() ? 0 : last - first + 1; }
    void extend(Cycle c);

    friend bool operator==(const CycleSpan&, const CycleSpan&) = default;
};

struct UpdateTrace {
    Architecture architecture = Architecture::S1;
    std::size_t depth = 0;
    std::size_t word_width = 0;

    Cycle total_cycles = 0;
    std::size_t bus_read_cycles = 0;
    /// Cycles the controller spent waiting on the bus. For S3 this includes
    /// write-phase cycles where the next wide row is still incomplete.
    std::size_t stall_cycles = 0;
    CycleSpan erase_span;
    CycleSpan write_span;
    /// S3: consecutive write cycles from the end of the erase pass until the
    /// writer first has to wait for the bus. Zero for S1/S2.
    Cycle catch_up_cycles = 0;
    /// Empty when event recording is disabled.
    std::vector<TraceEvent> events;

    /// Line-delimited JSON: one header record, one record per event, one
    /// summary record.
    void write_jsonl(std::ostream& out) const;
    std::string to_jsonl() const;
};

} // namespace rcam
