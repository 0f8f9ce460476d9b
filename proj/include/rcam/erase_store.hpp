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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rcam/bits.hpp"
#include "rcam/geometry.hpp"

namespace rcam {

/// Per-RCU erase RAM of the traditional RCwE: the last sub-word written to
/// each of the 32 slots.
class PerUnitEraseRam {
  public:
    /// Read-before-write: returns the previous entry, then stores `sub_word`.
    std::uint8_t swap(std::size_t slot, std::uint8_t sub_word);
    std::uint8_t at(std::size_t slot) const;

  private:
    std::array<std::uint8_t, kRcuSlots> entries_{};
};

/// Single dual-port memory of `rows` x `width` bits holding beat r of the
/// last update in row r.
class CentralEraseRam {
  public:
    CentralEraseRam(std::size_t rows, std::size_t width);
    explicit CentralEraseRam(const CamGeometry& geometry);

    std::size_t rows() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    /// Returns the prior contents of `row` and overwrites it in the same cycle.
    WideWord load_beat(std::size_t row, const WideWord& beat);
    const WideWord& read_row(std::size_t row) const;

  private:
    std::size_t width_;
    std::vector<WideWord> rows_;
};

/// P side-by-side memories, each rows_per_partition x width bits. Beat b
/// lands in partition b mod P at row b div P; a wide read returns the same
/// row of every partition at once.
///
/// Dual-port rule: within one cycle the owner must issue `read_wide` before
/// any `load_beat` of the same row, so reads observe the pre-load contents.
class HPartEraseRam {
  public:
    HPartEraseRam(std::size_t partitions, std::size_t rows_per_partition, std::size_t width);
    explicit HPartEraseRam(const CamGeometry& geometry);

    std::size_t partitions() const { return partitions_.size(); }
    std::size_t rows_per_partition() const { return rows_per_partition_; }
    std::size_t width() const { return width_; }
    std::size_t beat_capacity() const { return partitions() * rows_per_partition_; }

    void load_beat(std::size_t beat_index, const WideWord& payload);
    /// Partition 0 in the low-order position.
    WideWord read_wide(std::size_t row) const;
    const WideWord& partition_row(std::size_t partition, std::size_t row) const;

  private:
    std::size_t rows_per_partition_;
    std::size_t width_;
    std::vector<std::vector<WideWord>> partitions_;
};

} // namespace rcam
