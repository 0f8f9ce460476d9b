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
#include <memory>
#include <vector>

#include "rcam/bits.hpp"
#include "rcam/cam_kernel.hpp"
#include "rcam/erase_store.hpp"
#include "rcam/geometry.hpp"
#include "rcam/memory_model.hpp"
#include "rcam/trace.hpp"

namespace rcam {

/// New CAM contents, word 0 first.
struct UpdatePayload {
    std::size_t word_width = 0;
    std::vector<std::uint64_t> words;

    /// Throws GeometryError if the payload does not fit `geometry`.
    void check(const CamGeometry& geometry) const;
};

/// Word i of beat r sits in the i-th W-bit field of the beat, from bit 0.
std::vector<WideWord> pack_beats(const UpdatePayload& payload, const CamGeometry& geometry);

struct EngineOptions {
    bool record_events = true;
    /// S1 only: request the next beat when the current one starts draining
    /// instead of when it is empty.
    bool s1_prefetch = false;
    /// Fault injection: keep the erase RAM bookkeeping but never clear the
    /// stale RCU cells.
    bool skip_erase = false;
};

enum class Phase { Idle, Interleaved, Erase, Write };

/// Cycle-stepped update controller that owns one CAM and its erase RAM.
/// `begin` arms a full-table update; every `step` advances one clock.
/// Searching is only legal while idle; `probe` bypasses that check for
/// phase-boundary inspection.
class UpdateEngine {
  public:
    static std::unique_ptr<UpdateEngine> create(const CamGeometry& geometry, const BusModel& bus,
                                                EngineOptions options = {});

    virtual ~UpdateEngine() = default;
    UpdateEngine(const UpdateEngine&) = delete;
    UpdateEngine& operator=(const UpdateEngine&) = delete;

    void begin(UpdatePayload payload);
    /// Advances one cycle. Returns true while the update is still running.
    bool step();
    bool busy() const { return phase_ != Phase::Idle; }
    /// begin + step to completion.
    const UpdateTrace& update(UpdatePayload payload);

    Phase phase() const { return phase_; }
    Cycle cycle() const { return cycle_; }

    /// One search per cycle; throws InvariantError while an update runs.
    MatchVector search(std::uint64_t key);
    MatchVector probe(std::uint64_t key) const;
    std::uint64_t search_cycles() const { return search_cycles_; }

    const CamGeometry& geometry() const { return geometry_; }
    const BusModel& bus() const { return bus_; }
    const CamArray& cam() const { return cam_; }
    const UpdateTrace& trace() const { return trace_; }

  protected:
    UpdateEngine(const CamGeometry& geometry, const BusModel& bus, EngineOptions options);

    virtual void on_begin() = 0;
    /// Simulates cycle `t`; returns true when the update is complete.
    virtual bool on_step(Cycle t) = 0;

    void check_key(std::uint64_t key) const;
    void record(Cycle t, EventKind kind, std::int64_t first, std::int64_t count);
    void erase_words(Cycle t, std::size_t first, std::span<const std::uint64_t> old_values);
    void write_words(Cycle t, std::size_t first, std::span<const std::uint64_t> values);

    CamGeometry geometry_;
    BusModel bus_;
    EngineOptions options_;
    CamArray cam_;
    UpdatePayload payload_;
    std::vector<WideWord> beats_;
    UpdateTrace trace_;
    Phase phase_ = Phase::Idle;
    Cycle cycle_ = 0;
    std::uint64_t search_cycles_ = 0;
};

/// Traditional RCwE array. A shift register unpacks each beat into W-bit
/// words; each word costs one erase cycle and one write cycle, all slices
/// in lockstep. Beats are fetched on demand.
class S1Engine final : public UpdateEngine {
  public:
    S1Engine(const CamGeometry& geometry, const BusModel& bus, EngineOptions options = {});

    /// Incremental two-cycle update of a single word; returns its trace.
    const UpdateTrace& update_word(std::size_t index, std::uint64_t value);

    const PerUnitEraseRam& erase_ram(std::size_t rcu) const { return erase_rams_[rcu]; }

  protected:
    void on_begin() override;
    bool on_step(Cycle t) override;

  private:
    void erase_stage(Cycle t, std::size_t word, std::uint64_t value);
    void write_stage(Cycle t, std::size_t word, std::uint64_t value);

    std::vector<PerUnitEraseRam> erase_rams_;
    std::unique_ptr<DiscreteBus> fetch_;
    std::size_t word_ = 0;
    bool write_half_ = false;
    Cycle beat_ready_ = 0;
    std::size_t beat_ = 0;
    bool beat_logged_ = false;
    Cycle pending_ready_ = 0;
};

/// Centralized erase RAM. Phase E streams beats in, swapping each into the
/// erase RAM and clearing the k words it displaces; phase W then writes k
/// words per cycle back out of the erase RAM.
class S2Engine final : public UpdateEngine {
  public:
    S2Engine(const CamGeometry& geometry, const BusModel& bus, EngineOptions options = {});

    const CentralEraseRam& erase_ram() const { return erase_ram_; }

  protected:
    void on_begin() override;
    bool on_step(Cycle t) override;

  private:
    CentralEraseRam erase_ram_;
    std::vector<Cycle> arrivals_;
    std::size_t next_beat_ = 0;
    std::size_t next_row_ = 0;
};

/// Horizontally partitioned erase RAM. The erase pass reads one wide row of
/// old contents per cycle while beats stream in; afterwards each wide row
/// is written as soon as all P of its beats have landed.
class S3Engine final : public UpdateEngine {
  public:
    S3Engine(const CamGeometry& geometry, const BusModel& bus, EngineOptions options = {});

    const HPartEraseRam& erase_ram() const { return erase_ram_; }

  protected:
    void on_begin() override;
    bool on_step(Cycle t) override;

  private:
    HPartEraseRam erase_ram_;
    std::vector<Cycle> arrivals_;
    std::size_t next_beat_ = 0;
    std::size_t next_group_ = 0;
    bool catching_up_ = true;
};

} // namespace rcam
