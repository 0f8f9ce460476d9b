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

#include "rcam/erase_store.hpp"

#include <string>

#include "rcam/errors.hpp"

namespace rcam {

std::uint8_t PerUnitEraseRam::swap(std::size_t slot, std::uint8_t sub_word) {
    if (slot >= kRcuSlots) throw RangeError("erase RAM slot " + std::to_string(slot) + " out of range");
    const std::uint8_t old = entries_[slot];
    entries_[slot] = sub_word;
    return old;
}

std::uint8_t PerUnitEraseRam::at(std::size_t slot) const {
    if (slot >= kRcuSlots) throw RangeError("erase RAM slot " + std::to_string(slot) + " out of range");
    return entries_[slot];
}

CentralEraseRam::CentralEraseRam(std::size_t rows, std::size_t width) : width_(width), rows_(rows, WideWord(width)) {
    if (rows == 0) throw GeometryError("central erase RAM needs at least one row");
}

CentralEraseRam::CentralEraseRam(const CamGeometry& geometry)
    : CentralEraseRam(geometry.beat_count(), geometry.bus_width()) {}

WideWord CentralEraseRam::load_beat(std::size_t row, const WideWord& beat) {
    if (row >= rows_.size()) throw RangeError("erase RAM row " + std::to_string(row) + " out of range");
    if (beat.width() != width_) throw GeometryError("beat width does not match erase RAM width");
    WideWord old = std::move(rows_[row]);
    rows_[row] = beat;
    return old;
}

const WideWord& CentralEraseRam::read_row(std::size_t row) const {
    if (row >= rows_.size()) throw RangeError("erase RAM row " + std::to_string(row) + " out of range");
    return rows_[row];
}

HPartEraseRam::HPartEraseRam(std::size_t partitions, std::size_t rows_per_partition, std::size_t width)
    : rows_per_partition_(rows_per_partition), width_(width),
      partitions_(partitions, std::vector<WideWord>(rows_per_partition, WideWord(width))) {
    if (partitions == 0 || rows_per_partition == 0) throw GeometryError("partitioned erase RAM cannot be empty");
}

HPartEraseRam::HPartEraseRam(const CamGeometry& geometry)
    : HPartEraseRam(geometry.partitions(), geometry.beat_count() / geometry.partitions(), geometry.bus_width()) {}

void HPartEraseRam::load_beat(std::size_t beat_index, const WideWord& payload) {
    if (beat_index >= beat_capacity())
        throw RangeError("beat " + std::to_string(beat_index) + " beyond erase RAM capacity");
    if (payload.width() != width_) throw GeometryError("beat width does not match erase RAM width");
    partitions_[beat_index % partitions()][beat_index / partitions()] = payload;
}

WideWord HPartEraseRam::read_wide(std::size_t row) const {
    if (row >= rows_per_partition_) throw RangeError("wide row " + std::to_string(row) + " out of range");
    std::vector<WideWord> parts;
    parts.reserve(partitions());
    for (const auto& p : partitions_) parts.push_back(p[row]);
    return WideWord::concat(parts);
}

const WideWord& HPartEraseRam::partition_row(std::size_t partition, std::size_t row) const {
    if (partition >= partitions() || row >= rows_per_partition_) throw RangeError("partition row out of range");
    return partitions_[partition][row];
}

} // namespace rcam
