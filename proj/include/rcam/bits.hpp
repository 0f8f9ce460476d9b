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
#include <span>
#include <vector>

namespace rcam {

/// Fixed-width bit string used for bus beats and erase-RAM rows. Bit 0 is
/// the least significant bit of the first 64-bit limb. Widths are multiples
/// of 64.
class WideWord {
  public:
    WideWord() = default;
    explicit WideWord(std::size_t width_bits);

    std::size_t width() const { return width_; }

    /// Field `index` of `field_bits` bits; field i covers bits
    /// [i * field_bits, (i + 1) * field_bits). `field_bits` must divide 64.
    std::uint64_t field(std::size_t index, std::size_t field_bits) const;
    void set_field(std::size_t index, std::size_t field_bits, std::uint64_t value);

    std::span<const std::uint64_t> limbs() const { return limbs_; }
    std::span<std::uint64_t> limbs() { return limbs_; }

    bool is_zero() const;

    /// Concatenate `parts`, parts[0] in the low-order position.
    static WideWord concat(std::span<const WideWord> parts);

    friend bool operator==(const WideWord&, const WideWord&) = default;

  private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> limbs_;
};

/// Length-N match vector; bit i set iff CAM word i equals the key.
class MatchVector {
  public:
    MatchVector() = default;
    explicit MatchVector(std::size_t length);

    std::size_t size() const { return length_; }
    bool test(std::size_t i) const { return (limbs_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { limbs_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { limbs_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    std::size_t count() const;
    bool none() const;

    std::span<const std::uint64_t> limbs() const { return limbs_; }
    std::span<std::uint64_t> limbs() { return limbs_; }

    friend bool operator==(const MatchVector&, const MatchVector&) = default;

  private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> limbs_;
};

enum class ExtractMode { FirstOnly, All };

/// Priority-encoder view of a match vector: ascending set positions.
std::vector<std::size_t> extract_match_addresses(const MatchVector& match, ExtractMode mode);

} // namespace rcam
