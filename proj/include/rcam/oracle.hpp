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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcam/bits.hpp"

namespace rcam {

class UpdateEngine;
struct UpdatePayload;

/// Brute-force reference CAM: a list of words with occupancy flags,
/// searched by linear scan.
class ReferenceCam {
  public:
    ReferenceCam(std::size_t depth, std::size_t word_width);

    std::size_t depth() const { return words_.size(); }
    std::size_t word_width() const { return width_; }

    void update(std::size_t index, std::uint64_t value);
    void load(const UpdatePayload& payload);
    MatchVector search(std::uint64_t key) const;

    std::uint64_t word(std::size_t index) const { return words_.at(index); }
    bool occupied(std::size_t index) const { return occupied_.at(index); }

  private:
    std::size_t width_;
    std::vector<std::uint64_t> words_;
    std::vector<bool> occupied_;
};

struct EquivalenceVerdict {
    bool pass = true;
    std::size_t keys_checked = 0;
    /// First divergence, if any: the key and the lowest differing index.
    std::optional<std::uint64_t> key;
    std::optional<std::size_t> index;
    /// True when the system reported a match the reference did not.
    bool false_positive = false;

    std::string describe() const;
};

/// Searches `system` and `reference` with every key and reports the first
/// disagreement. Uses `UpdateEngine::search`, so each key costs one cycle.
EquivalenceVerdict equivalence_check(UpdateEngine& system, const ReferenceCam& reference,
                                     std::span<const std::uint64_t> keys);

} // namespace rcam
