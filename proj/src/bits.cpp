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

#include "rcam/bits.hpp"

#include <algorithm>
#include <bit>

#include "rcam/errors.hpp"

namespace rcam {

WideWord::WideWord(std::size_t width_bits) : width_(width_bits), limbs_(width_bits / 64, 0) {
    if (width_bits % 64 != 0) throw GeometryError("wide word width must be a multiple of 64");
}

std::uint64_t WideWord::field(std::size_t index, std::size_t field_bits) const {
    const std::size_t bit = index * field_bits;
    if (bit + field_bits > width_) throw RangeError("field beyond wide word");
    const std::uint64_t raw = limbs_[bit / 64] >> (bit % 64);
    return field_bits == 64 ? raw : raw & ((std::uint64_t{1} << field_bits) - 1);
}

void WideWord::set_field(std::size_t index, std::size_t field_bits, std::uint64_t value) {
    const std::size_t bit = index * field_bits;
    if (bit + field_bits > width_) throw RangeError("field beyond wide word");
    const std::uint64_t mask = field_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << field_bits) - 1;
    std::uint64_t& limb = limbs_[bit / 64];
    limb = (limb & ~(mask << (bit % 64))) | ((value & mask) << (bit % 64));
}

bool WideWord::is_zero() const {
    return std::all_of(limbs_.begin(), limbs_.end(), [](std::uint64_t l) { return l == 0; });
}

WideWord WideWord::concat(std::span<const WideWord> parts) {
    std::size_t width = 0;
    for (const auto& p : parts) width += p.width();
    WideWord out(width);
    auto dst = out.limbs_.begin();
    for (const auto& p : parts) dst = std::copy(p.limbs_.begin(), p.limbs_.end(), dst);
    return out;
}

MatchVector::MatchVector(std::size_t length) : length_(length), limbs_((length + 63) / 64, 0) {}

std::size_t MatchVector::count() const {
    std::size_t n = 0;
    for (auto l : limbs_) n += static_cast<std::size_t>(std::popcount(l));
    return n;
}

bool MatchVector::none() const {
    return std::all_of(limbs_.begin(), limbs_.end(), [](std::uint64_t l) { return l == 0; });
}

std::vector<std::size_t> extract_match_addresses(const MatchVector& match, ExtractMode mode) {
    std::vector<std::size_t> out;
    const auto limbs = match.limbs();
    for (std::size_t li = 0; li < limbs.size(); ++li) {
        std::uint64_t bits = limbs[li];
        while (bits != 0) {
            out.push_back(li * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            if (mode == ExtractMode::FirstOnly) return out;
            bits &= bits - 1;
        }
    }
    return out;
}

} // namespace rcam
