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

#include "rcam/update_engines.hpp"

#include <string>
#include <utility>

#include "rcam/errors.hpp"

namespace rcam {

void UpdatePayload::check(const CamGeometry& geometry) const {
    if (word_width != geometry.word_width())
        throw GeometryError("payload word width " + std::to_string(word_width) + " does not match CAM width " +
                            std::to_string(geometry.word_width()));
    if (words.size() != geometry.depth())
        throw GeometryError("payload holds " + std::to_string(words.size()) + " words, CAM depth is " +
                            std::to_string(geometry.depth()));
    const std::uint64_t mask = geometry.word_mask();
    for (std::size_t i = 0; i < words.size(); ++i)
        if ((words[i] & ~mask) != 0)
            throw GeometryError("payload word " + std::to_string(i) + " wider than " + std::to_string(word_width) +
                                " bits");
}

std::vector<WideWord> pack_beats(const UpdatePayload& payload, const CamGeometry& geometry) {
    payload.check(geometry);
    const std::size_t per_beat = geometry.words_per_beat();
    std::vector<WideWord> beats(geometry.beat_count(), WideWord(geometry.bus_width()));
    for (std::size_t v = 0; v < payload.words.size(); ++v)
        beats[v / per_beat].set_field(v % per_beat, geometry.word_width(), payload.words[v]);
    return beats;
}

// ---------------------------------------------------------------------------

std::unique_ptr<UpdateEngine> UpdateEngine::create(const CamGeometry& geometry, const BusModel& bus,
                                                   EngineOptions options) {
    switch (geometry.architecture()) {
    case Architecture::S1: return std::make_unique<S1Engine>(geometry, bus, options);
    case Architecture::S2: return std::make_unique<S2Engine>(geometry, bus, options);
    case Architecture::S3: return std::make_unique<S3Engine>(geometry, bus, options);
    }
    throw GeometryError("unknown architecture");
}

UpdateEngine::UpdateEngine(const CamGeometry& geometry, const BusModel& bus, EngineOptions options)
    : geometry_(geometry), bus_(bus), options_(options), cam_(geometry) {
    bus_.validate();
    if (bus_.bus_width_b != geometry_.bus_width())
        throw GeometryError("bus model width " + std::to_string(bus_.bus_width_b) +
                            " does not match geometry bus width " + std::to_string(geometry_.bus_width()));
}

void UpdateEngine::begin(UpdatePayload payload) {
    if (busy()) throw InvariantError("update already in progress");
    payload.check(geometry_);
    payload_ = std::move(payload);
    if (geometry_.architecture() != Architecture::S1) beats_ = pack_beats(payload_, geometry_);
    trace_ = UpdateTrace{};
    trace_.architecture = geometry_.architecture();
    trace_.depth = geometry_.depth();
    trace_.word_width = geometry_.word_width();
    cycle_ = 0;
    on_begin();
}

bool UpdateEngine::step() {
    if (!busy()) return false;
    const bool done = on_step(cycle_);
    ++cycle_;
    if (done) {
        trace_.total_cycles = cycle_;
        phase_ = Phase::Idle;
    }
    return !done;
}

const UpdateTrace& UpdateEngine::update(UpdatePayload payload) {
    begin(std::move(payload));
    while (step()) {
    }
    return trace_;
}

void UpdateEngine::check_key(std::uint64_t key) const {
    if ((key & ~geometry_.word_mask()) != 0)
        throw RangeError("search key wider than " + std::to_string(geometry_.word_width()) + " bits");
}

MatchVector UpdateEngine::search(std::uint64_t key) {
    if (busy()) throw InvariantError("search issued while an update is in progress; use probe()");
    check_key(key);
    ++search_cycles_;
    return cam_.search(key);
}

MatchVector UpdateEngine::probe(std::uint64_t key) const {
    check_key(key);
    return cam_.search(key);
}

void UpdateEngine::record(Cycle t, EventKind kind, std::int64_t first, std::int64_t count) {
    switch (kind) {
    case EventKind::BeatArrival: ++trace_.bus_read_cycles; break;
    case EventKind::Stall: ++trace_.stall_cycles; break;
    case EventKind::Erase: trace_.erase_span.extend(t); break;
    case EventKind::Write: trace_.write_span.extend(t); break;
    }
    if (options_.record_events) trace_.events.push_back({t, kind, first, count});
}

void UpdateEngine::erase_words(Cycle t, std::size_t first, std::span<const std::uint64_t> old_values) {
    if (!options_.skip_erase)
        for (std::size_t i = 0; i < old_values.size(); ++i) cam_.write_word(first + i, old_values[i], false);
    record(t, EventKind::Erase, static_cast<std::int64_t>(first), static_cast<std::int64_t>(old_values.size()));
}

void UpdateEngine::write_words(Cycle t, std::size_t first, std::span<const std::uint64_t> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        cam_.write_word(first + i, values[i], true);
        cam_.mark_occupied(first + i);
    }
    record(t, EventKind::Write, static_cast<std::int64_t>(first), static_cast<std::int64_t>(values.size()));
}

// ---------------------------------------------------------------------------
// S1

S1Engine::S1Engine(const CamGeometry& geometry, const BusModel& bus, EngineOptions options)
    : UpdateEngine(geometry, bus, options), erase_rams_(geometry.rcu_count()) {
    if (geometry.architecture() != Architecture::S1) throw GeometryError("S1 engine needs an S1 geometry");
}

void S1Engine::on_begin() {
    phase_ = Phase::Interleaved;
    word_ = 0;
    write_half_ = false;
    beat_ = 0;
    beat_logged_ = false;
    fetch_ = std::make_unique<DiscreteBus>(bus_);
    // The first fetch is issued the cycle before the update window opens, so
    // an ideal bus delivers beat 0 at cycle 0.
    beat_ready_ = fetch_->issue(-1);
    pending_ready_ = 0;
}

bool S1Engine::on_step(Cycle t) {
    if (t < beat_ready_) {
        record(t, EventKind::Stall, 0, 1);
        return false;
    }
    if (!beat_logged_) {
        record(t, EventKind::BeatArrival, static_cast<std::int64_t>(beat_), 1);
        beat_logged_ = true;
    }

    const std::size_t per_beat = geometry_.words_per_beat();
    const std::size_t beats = geometry_.beat_count();

    if (!write_half_) {
        if (options_.s1_prefetch && word_ % per_beat == 0 && beat_ + 1 < beats) pending_ready_ = fetch_->issue(t);
        erase_stage(t, word_, payload_.words[word_]);
        write_half_ = true;
        return false;
    }

    write_stage(t, word_, payload_.words[word_]);
    write_half_ = false;
    ++word_;
    if (word_ % per_beat == 0) {
        ++beat_;
        beat_logged_ = false;
        if (beat_ < beats) beat_ready_ = options_.s1_prefetch ? pending_ready_ : fetch_->issue(t);
    }
    return word_ == geometry_.depth();
}

void S1Engine::erase_stage(Cycle t, std::size_t word, std::uint64_t value) {
    const WordLocation loc = geometry_.locate(word);
    std::uint64_t old = 0;
    for (std::size_t c = 0; c < geometry_.slices(); ++c) {
        auto& eram = erase_rams_[geometry_.rcu_index(loc.rcb, loc.position, c)];
        const std::uint8_t prev = eram.swap(loc.group, static_cast<std::uint8_t>((value >> (8 * c)) & 0xFFu));
        old |= std::uint64_t{prev} << (8 * c);
    }
    erase_words(t, word, std::span(&old, 1));
}

void S1Engine::write_stage(Cycle t, std::size_t word, std::uint64_t value) {
    write_words(t, word, std::span(&value, 1));
}

const UpdateTrace& S1Engine::update_word(std::size_t index, std::uint64_t value) {
    if (busy()) throw InvariantError("update already in progress");
    geometry_.locate(index);
    if ((value & ~geometry_.word_mask()) != 0) throw RangeError("word wider than the CAM word");
    trace_ = UpdateTrace{};
    trace_.architecture = Architecture::S1;
    trace_.depth = geometry_.depth();
    trace_.word_width = geometry_.word_width();
    erase_stage(0, index, value);
    write_stage(1, index, value);
    trace_.total_cycles = 2;
    cycle_ = 2;
    return trace_;
}

// ---------------------------------------------------------------------------
// S2

S2Engine::S2Engine(const CamGeometry& geometry, const BusModel& bus, EngineOptions options)
    : UpdateEngine(geometry, bus, options), erase_ram_(geometry) {
    if (geometry.architecture() != Architecture::S2) throw GeometryError("S2 engine needs an S2 geometry");
}

void S2Engine::on_begin() {
    phase_ = Phase::Erase;
    arrivals_ = stream_schedule(bus_, geometry_.beat_count());
    next_beat_ = 0;
    next_row_ = 0;
}

bool S2Engine::on_step(Cycle t) {
    const std::size_t k = geometry_.words_per_beat_k();
    const std::size_t width = geometry_.word_width();
    const std::size_t rows = geometry_.beat_count();
    std::vector<std::uint64_t> words(k);

    if (phase_ == Phase::Erase) {
        if (arrivals_[next_beat_] != t) {
            record(t, EventKind::Stall, 0, 1);
            return false;
        }
        const std::size_t r = next_beat_;
        record(t, EventKind::BeatArrival, static_cast<std::int64_t>(r), 1);
        const WideWord old = erase_ram_.load_beat(r, beats_[r]);
        for (std::size_t i = 0; i < k; ++i) words[i] = old.field(i, width);
        erase_words(t, r * k, words);
        if (++next_beat_ == rows) phase_ = Phase::Write;
        return false;
    }

    const WideWord& row = erase_ram_.read_row(next_row_);
    for (std::size_t i = 0; i < k; ++i) words[i] = row.field(i, width);
    write_words(t, next_row_ * k, words);
    return ++next_row_ == rows;
}

// ---------------------------------------------------------------------------
// S3

S3Engine::S3Engine(const CamGeometry& geometry, const BusModel& bus, EngineOptions options)
    : UpdateEngine(geometry, bus, options), erase_ram_(geometry) {
    if (geometry.architecture() != Architecture::S3) throw GeometryError("S3 engine needs an S3 geometry");
}

void S3Engine::on_begin() {
    phase_ = Phase::Erase;
    arrivals_ = stream_schedule(bus_, geometry_.beat_count());
    next_beat_ = 0;
    next_group_ = 0;
    catching_up_ = true;
}

bool S3Engine::on_step(Cycle t) {
    const std::size_t k = geometry_.words_per_beat_k();
    const std::size_t width = geometry_.word_width();
    const std::size_t parts = geometry_.partitions();
    const auto groups = static_cast<Cycle>(geometry_.group_count());
    std::vector<std::uint64_t> words(k);

    // Port order inside one cycle: the erase pass reads the old wide row
    // before this cycle's beat is loaded.
    if (t < groups) {
        const WideWord old = erase_ram_.read_wide(static_cast<std::size_t>(t));
        for (std::size_t i = 0; i < k; ++i) words[i] = old.field(i, width);
        erase_words(t, static_cast<std::size_t>(t) * k, words);
    }

    if (next_beat_ < arrivals_.size() && arrivals_[next_beat_] == t) {
        record(t, EventKind::BeatArrival, static_cast<std::int64_t>(next_beat_), 1);
        erase_ram_.load_beat(next_beat_, beats_[next_beat_]);
        ++next_beat_;
    }

    if (t == groups - 1) phase_ = Phase::Write;
    if (t < groups) return false;

    const std::size_t g = next_group_;
    const std::size_t last_beat = g * parts + parts - 1;
    const bool ready = next_beat_ > last_beat && arrivals_[last_beat] < t;
    if (!ready) {
        catching_up_ = false;
        record(t, EventKind::Stall, 0, 1);
        return false;
    }
    const WideWord row = erase_ram_.read_wide(g);
    for (std::size_t i = 0; i < k; ++i) words[i] = row.field(i, width);
    write_words(t, g * k, words);
    if (catching_up_) ++trace_.catch_up_cycles;
    return ++next_group_ == geometry_.group_count();
}

} // namespace rcam
