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

#include "rcam/geometry.hpp"

#include <bit>
#include <sstream>

#include "rcam/errors.hpp"

namespace rcam {

std::string_view to_string(Architecture arch) {
    switch (arch) {
    case Architecture::S1: return "S1";
    case Architecture::S2: return "S2";
    case Architecture::S3: return "S3";
    }
    return "?";
}

Architecture parse_architecture(std::string_view name) {
    if (name == "S1" || name == "s1") return Architecture::S1;
    if (name == "S2" || name == "s2") return Architecture::S2;
    if (name == "S3" || name == "s3") return Architecture::S3;
    throw ConfigError("unknown architecture '" + std::string(name) + "'");
}

CamGeometry CamGeometry::make(Architecture arch, std::size_t depth, std::size_t word_width,
                              std::size_t bus_width, std::size_t partitions) {
    auto fail = [&](const std::string& why) {
        std::ostringstream msg;
        msg << "invalid geometry " << depth << "x" << word_width << " (" << to_string(arch)
            << ", B=" << bus_width << ", P=" << partitions << "): " << why;
        throw GeometryError(msg.str());
    };

    if (depth == 0) fail("depth must be positive");
    if (word_width == 0 || word_width % kSubWordBits != 0 || word_width > 64)
        fail("word width must be a multiple of 8 in [8, 64]");
    if (bus_width == 0 || bus_width % 64 != 0) fail("bus width must be a positive multiple of 64");
    if (bus_width % word_width != 0) fail("bus width must be divisible by the word width");

    CamGeometry g;
    g.arch_ = arch;
    g.depth_ = depth;
    g.width_ = word_width;
    g.bus_width_ = bus_width;

    switch (arch) {
    case Architecture::S1:
        g.partitions_ = 1;
        g.k_ = 1;
        break;
    case Architecture::S2:
        g.partitions_ = 1;
        g.k_ = bus_width / word_width;
        break;
    case Architecture::S3:
        if (partitions < 2 || !std::has_single_bit(partitions))
            fail("partition count must be a power of two >= 2");
        g.partitions_ = partitions;
        g.k_ = partitions * bus_width / word_width;
        break;
    }

    if (depth % g.words_per_beat() != 0) fail("depth must be a whole number of bus beats");
    if (depth % g.k_ != 0) fail("depth must be a multiple of the words written per cycle");

    const std::size_t block = kRcuSlots * g.k_;
    g.rcb_count_ = (depth + block - 1) / block;
    return g;
}

std::uint64_t CamGeometry::word_mask() const {
    return width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
}

WordLocation CamGeometry::locate(std::size_t word) const {
    if (word >= depth_)
        throw RangeError("word index " + std::to_string(word) + " out of range [0, " + std::to_string(depth_) + ")");
    const std::size_t block = kRcuSlots * k_;
    return {word / block, (word % block) / k_, word % k_};
}

std::size_t CamGeometry::word_index(const WordLocation& loc) const {
    if (loc.group >= kRcuSlots || loc.position >= k_ || loc.rcb >= rcb_count_)
        throw RangeError("word location out of range");
    const std::size_t word = loc.rcb * kRcuSlots * k_ + loc.group * k_ + loc.position;
    if (word >= depth_) throw RangeError("word location beyond the populated depth");
    return word;
}

std::string CamGeometry::describe() const {
    std::ostringstream out;
    out << depth_ << "x" << width_ << " " << to_string(arch_) << " (B=" << bus_width_ << ", k=" << k_
        << ", P=" << partitions_ << ", RCBs=" << rcb_count_ << ")";
    return out.str();
}

} // namespace rcam
