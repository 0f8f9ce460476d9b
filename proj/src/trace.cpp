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

#include "rcam/trace.hpp"

#include <ostream>
#include <sstream>

namespace rcam {

std::string_view to_string(EventKind kind) {
    switch (kind) {
    case EventKind::BeatArrival: return "beat";
    case EventKind::Erase: return "erase";
    case EventKind::Write: return "write";
    case EventKind::Stall: return "stall";
    }
    return "?";
}

void CycleSpan::extend(Cycle c) {
    if (empty()) first = c;
    last = c;
}

namespace {

void emit_span(std::ostream& out, const char* name, const CycleSpan& span) {
    out << ",\"" << name << "\":";
    if (span.empty())
        out << "null";
    else
        out << '[' << span.first << ',' << span.last << ']';
}

} // namespace

void UpdateTrace::write_jsonl(std::ostream& out) const {
    out << "{\"record\":\"trace\",\"architecture\":\"" << to_string(architecture) << "\",\"depth\":" << depth
        << ",\"word_width\":" << word_width << ",\"events\":" << events.size() << "}\n";
    for (const auto& e : events) {
        out << "{\"cycle\":" << e.cycle << ",\"kind\":\"" << to_string(e.kind) << "\",\"first\":" << e.first
            << ",\"count\":" << e.count << "}\n";
    }
    out << "{\"record\":\"summary\",\"total_cycles\":" << total_cycles << ",\"bus_read_cycles\":" << bus_read_cycles
        << ",\"stall_cycles\":" << stall_cycles;
    emit_span(out, "erase_span", erase_span);
    emit_span(out, "write_span", write_span);
    out << ",\"catch_up_cycles\":" << catch_up_cycles << "}\n";
}

std::string UpdateTrace::to_jsonl() const {
    std::ostringstream out;
    write_jsonl(out);
    return out.str();
}

} // namespace rcam
