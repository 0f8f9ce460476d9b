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
#include <span>
#include <vector>

#include "rcam/bits.hpp"
#include "rcam/geometry.hpp"

namespace rcam {

/// One RAM CAM unit: a 256-row x 32-slot bit matrix. The write port sees it
/// as 8,192 x 1 bit addressed by {sub_word, slot}; the search port sees it
/// as 256 x 32 bits addressed by the key, so a search is one row read.
class RcuState {
  public:
    /// Write port. `bit` is the set/clear value: 1 stores, 0 erases.
    void write(std::size_t sub_word, std::size_t slot, bool bit);

    /// Search port: bit j of the result is cell (key, j).
    std::uint32_t search(std::size_t key) const;

    bool cell(std::size_t sub_word, std::size_t slot) const;
    bool all_zero() const;
    /// Number of set cells in column `slot`.
    std::size_t column_population(std::size_t slot) const;

    std::span<const std::uint32_t, kRcuRows> rows() const { return rows_; }

    friend bool operator==(const RcuState&, const RcuState&) = default;

  private:
    std::array<std::uint32_t, kRcuRows> rows_{};
};

/// Global match vector from per-RCU slot vectors. `slot_vectors` holds one
/// entry per RCU in `CamGeometry::rcu_index` order; entry (rcb, i, c) is
/// the search result of slice c for sub-word c of the key. A word matches
/// when every slice reports a hit in the same slot.
MatchVector assemble_match(const CamGeometry& geometry, std::span<const std::uint32_t> slot_vectors);

/// The full RCU array of one RCAM instance.
class CamArray {
  public:
    explicit CamArray(const CamGeometry& geometry);

    const CamGeometry& geometry() const { return geometry_; }

    RcuState& rcu(std::size_t rcb, std::size_t position, std::size_t slice) {
        return rcus_[geometry_.rcu_index(rcb, position, slice)];
    }
    const RcuState& rcu(std::size_t rcb, std::size_t position, std::size_t slice) const {
        return rcus_[geometry_.rcu_index(rcb, position, slice)];
    }
    std::span<const RcuState> rcus() const { return rcus_; }

    /// Drive the write port of every slice of `word` with the matching
    /// sub-word of `value` and set/clear bit `bit`.
    void write_word(std::size_t word, std::uint64_t value, bool bit);

    MatchVector search(std::uint64_t key) const;

    bool all_zero() const;

    /// Bookkeeping for invariant checks only; never read by the search path.
    void mark_occupied(std::size_t word) { occupied_[word] = true; }
    bool occupied(std::size_t word) const { return occupied_[word]; }

    /// Order-sensitive FNV-1a digest of every cell, for purity checks.
    std::uint64_t digest() const;

  private:
    CamGeometry geometry_;
    std::vector<RcuState> rcus_;
    std::vector<bool> occupied_;
};

} // namespace rcam
