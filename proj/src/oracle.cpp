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

#include "rcam/oracle.hpp"

#include <bit>
#include <sstream>

#include "rcam/errors.hpp"
#include "rcam/update_engines.hpp"

namespace rcam {

ReferenceCam::ReferenceCam(std::size_t depth, std::size_t word_width)
    : width_(word_width), words_(depth, 0), occupied_(depth, false) {
    if (word_width == 0 || word_width > 64) throw GeometryError("reference word width must lie in [1, 64]");
}

void ReferenceCam::update(std::size_t index, std::uint64_t value) {
    if (index >= words_.size()) throw RangeError("reference index " + std::to_string(index) + " out of range");
    if (width_ < 64 && (value >> width_) != 0)
        throw RangeError("value " + std::to_string(value) + " exceeds " + std::to_string(width_) + " bits");
    words_[index] = value;
    occupied_[index] = true;
}

void ReferenceCam::load(const UpdatePayload& payload) {
    if (payload.word_width != width_ || payload.words.size() != words_.size())
        throw GeometryError("payload shape does not match the reference CAM");
    for (std::size_t i = 0; i < payload.words.size(); ++i) update(i, payload.words[i]);
}

MatchVector ReferenceCam::search(std::uint64_t key) const {
    MatchVector out(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (occupied_[i] && words_[i] == key) out.set(i);
    return out;
}

std::string EquivalenceVerdict::describe() const {
    std::ostringstream out;
    if (pass) {
        out << "equivalent over " << keys_checked << " keys";
    } else {
        out << "divergence at key 0x" << std::hex << *key << std::dec << ", word " << *index << " ("
            << (false_positive ? "false positive" : "missed match") << ") after " << keys_checked << " keys";
    }
    return out.str();
}

EquivalenceVerdict equivalence_check(UpdateEngine& system, const ReferenceCam& reference,
                                     std::span<const std::uint64_t> keys) {
    const auto& g = system.geometry();
    if (g.depth() != reference.depth() || g.word_width() != reference.word_width())
        throw GeometryError("system " + g.describe() + " and reference " + std::to_string(reference.depth()) + "x" +
                            std::to_string(reference.word_width()) + " differ in shape");

    EquivalenceVerdict verdict;
    for (std::uint64_t key : keys) {
        const MatchVector got = system.search(key);
        const MatchVector want = reference.search(key);
        ++verdict.keys_checked;
        if (got == want) continue;
        const auto a = got.limbs();
        const auto b = want.limbs();
        for (std::size_t li = 0; li < a.size(); ++li) {
            const std::uint64_t diff = a[li] ^ b[li];
            if (diff == 0) continue;
            const std::size_t bit = li * 64 + static_cast<std::size_t>(std::countr_zero(diff));
            verdict.pass = false;
            verdict.key = key;
            verdict.index = bit;
            verdict.false_positive = got.test(bit);
            return verdict;
        }
    }
    return verdict;
}

} // namespace rcam
