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

#include "rcam/cam_kernel.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rcam/errors.hpp"

namespace rcam {

namespace {

void check_cell(std::size_t sub_word, std::size_t slot) {
    if (sub_word >= kRcuRows) throw RangeError("sub-word " + std::to_string(sub_word) + " exceeds 8 bits");
    if (slot >= kRcuSlots) throw RangeError("slot " + std::to_string(slot) + " out of range [0, 32)");
}

} // namespace

void RcuState::write(std::size_t sub_word, std::size_t slot, bool bit) {
    check_cell(sub_word, slot);
    const std::uint32_t mask = std::uint32_t{1} << slot;
    if (bit)
        rows_[sub_word] |= mask;
    else
        rows_[sub_word] &= ~mask;
}

std::uint32_t RcuState::search(std::size_t key) const {
    if (key >= kRcuRows) throw RangeError("search key " + std::to_string(key) + " exceeds 8 bits");
    return rows_[key];
}

bool RcuState::cell(std::size_t sub_word, std::size_t slot) const {
    check_cell(sub_word, slot);
    return (rows_[sub_word] >> slot) & 1u;
}

bool RcuState::all_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](std::uint32_t r) { return r == 0; });
}

std::size_t RcuState::column_population(std::size_t slot) const {
    check_cell(0, slot);
    std::size_t n = 0;
    for (auto r : rows_) n += (r >> slot) & 1u;
    return n;
}

MatchVector assemble_match(const CamGeometry& geometry, std::span<const std::uint32_t> slot_vectors) {
    if (slot_vectors.size() != geometry.rcu_count())
        throw GeometryError("expected " + std::to_string(geometry.rcu_count()) + " slot vectors, got " +
                            std::to_string(slot_vectors.size()));

    const std::size_t k = geometry.words_per_beat_k();
    const std::size_t slices = geometry.slices();
    const std::size_t block = kRcuSlots * k;
    MatchVector match(geometry.depth());

    for (std::size_t rcb = 0; rcb < geometry.rcb_count(); ++rcb) {
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t base = geometry.rcu_index(rcb, i, 0);
            std::uint32_t hits = slot_vectors[base];
            for (std::size_t c = 1; c < slices && hits != 0; ++c) hits &= slot_vectors[base + c];
            while (hits != 0) {
                const auto j = static_cast<std::size_t>(std::countr_zero(hits));
                const std::size_t word = rcb * block + j * k + i;
                if (word < geometry.depth()) match.set(word);
                hits &= hits - 1;
            }
        }
    }
    return match;
}

CamArray::CamArray(const CamGeometry& geometry)
    : geometry_(geometry), rcus_(geometry.rcu_count()), occupied_(geometry.depth(), false) {}

void CamArray::write_word(std::size_t word, std::uint64_t value, bool bit) {
    const WordLocation loc = geometry_.locate(word);
    for (std::size_t c = 0; c < geometry_.slices(); ++c)
        rcu(loc.rcb, loc.position, c).write((value >> (8 * c)) & 0xFFu, loc.group, bit);
}

MatchVector CamArray::search(std::uint64_t key) const {
    if ((key & ~geometry_.word_mask()) != 0) throw RangeError("search key wider than the CAM word");
    const std::size_t slices = geometry_.slices();
    std::vector<std::uint32_t> slot_vectors(rcus_.size());
    for (std::size_t r = 0; r < rcus_.size(); ++r) {
        const std::size_t c = r % slices;
        slot_vectors[r] = rcus_[r].search((key >> (8 * c)) & 0xFFu);
    }
    return assemble_match(geometry_, slot_vectors);
}

bool CamArray::all_zero() const {
    return std::all_of(rcus_.begin(), rcus_.end(), [](const RcuState& r) { return r.all_zero(); });
}

std::uint64_t CamArray::digest() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& rcu : rcus_) {
        for (auto row : rcu.rows()) {
            h ^= row;
            h *= 0x100000001b3ull;
        }
    }
    return h;
}

} // namespace rcam
