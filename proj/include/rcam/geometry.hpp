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
#include <string>
#include <string_view>

namespace rcam {

/// Update architectures.
///  - S1: traditional RCwE, one erase RAM per RCU, two cycles per word.
///  - S2: centralized erase RAM plus bit-sliced match assembly.
///  - S3: S2 plus a horizontally partitioned erase RAM.
enum class Architecture { S1, S2, S3 };

std::string_view to_string(Architecture arch);
Architecture parse_architecture(std::string_view name);

/// Fixed RCU shape: one M10K block seen as 256 rows x 32 slots.
inline constexpr std::size_t kRcuRows = 256;
inline constexpr std::size_t kRcuSlots = 32;
inline constexpr std::size_t kSubWordBits = 8;
inline constexpr std::size_t kM10kBits = kRcuRows * kRcuSlots;

/// Position of a global word inside the RCU array.
struct WordLocation {
    std::size_t rcb;      ///< sub-RCAM block
    std::size_t group;    ///< slot inside every RCU of the block
    std::size_t position; ///< RCU column inside the block, [0, k)

    friend bool operator==(const WordLocation&, const WordLocation&) = default;
};

/// All structural parameters of one RCAM instance plus the derived index
/// maps. Construct through `CamGeometry::make`, which validates.
///
/// Word layout: word = rcb * (s * k) + group * k + position. For S1 the
/// array is a plain depth cascade of RCwEs, which is the k = 1 case.
class CamGeometry {
  public:
    static CamGeometry make(Architecture arch, std::size_t depth, std::size_t word_width,
                            std::size_t bus_width = 256, std::size_t partitions = 8);

    Architecture architecture() const { return arch_; }
    std::size_t depth() const { return depth_; }
    std::size_t word_width() const { return width_; }
    std::size_t bus_width() const { return bus_width_; }
    std::size_t rcu_rows() const { return kRcuRows; }
    std::size_t rcu_slots() const { return kRcuSlots; }
    std::size_t slices() const { return width_ / kSubWordBits; }
    std::size_t words_per_beat_k() const { return k_; }
    std::size_t partitions() const { return partitions_; }
    std::size_t rcb_count() const { return rcb_count_; }

    /// Words carried by one bus beat (B / W).
    std::size_t words_per_beat() const { return bus_width_ / width_; }
    /// Beats needed to stream the whole table (N * W / B).
    std::size_t beat_count() const { return depth_ / words_per_beat(); }
    /// Internal write groups (N / k); one group is written per write cycle.
    std::size_t group_count() const { return depth_ / k_; }
    std::size_t rcu_count() const { return rcb_count_ * k_ * slices(); }
    std::uint64_t word_mask() const;

    WordLocation locate(std::size_t word) const;
    std::size_t word_index(const WordLocation& loc) const;

    /// Flat index of RCU (rcb, position, slice).
    std::size_t rcu_index(std::size_t rcb, std::size_t position, std::size_t slice) const {
        return (rcb * k_ + position) * slices() + slice;
    }

    std::string describe() const;

    friend bool operator==(const CamGeometry&, const CamGeometry&) = default;

  private:
    CamGeometry() = default;

    Architecture arch_ = Architecture::S1;
    std::size_t depth_ = 0;
    std::size_t width_ = 0;
    std::size_t bus_width_ = 0;
    std::size_t partitions_ = 1;
    std::size_t k_ = 1;
    std::size_t rcb_count_ = 0;
};

} // namespace rcam
