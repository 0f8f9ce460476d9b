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

#include "rcam/resource_model.hpp"

#include <string>

#include "rcam/errors.hpp"

namespace rcam {

ResourceReport m10k_count(Architecture arch, std::size_t depth, std::size_t word_width) {
    if (depth == 0 || depth % kRcuSlots != 0)
        throw GeometryError("depth " + std::to_string(depth) + " is not a whole number of 32-slot RCUs");
    if (word_width == 0 || word_width % kSubWordBits != 0)
        throw GeometryError("word width " + std::to_string(word_width) + " is not a whole number of bytes");

    ResourceReport r;
    r.architecture = arch;
    r.depth = depth;
    r.word_width = word_width;
    r.rcu_blocks = (depth / kRcuSlots) * (word_width / kSubWordBits);

    const std::size_t payload_bits = depth * word_width;
    const std::size_t shared_erase = (payload_bits + kM10kBits - 1) / kM10kBits;
    if (arch == Architecture::S1) {
        r.erase_blocks = r.rcu_blocks;
        // Each per-unit erase RAM holds 32 sub-words in a whole block.
        r.erase_utilization = static_cast<double>(kRcuSlots * kSubWordBits) / static_cast<double>(kM10kBits);
    } else {
        r.erase_blocks = shared_erase;
        r.erase_utilization = static_cast<double>(payload_bits) / static_cast<double>(shared_erase * kM10kBits);
    }
    r.total_m10k = r.rcu_blocks + r.erase_blocks;
    r.device_fraction = static_cast<double>(r.total_m10k) / static_cast<double>(kDeviceM10kBlocks);
    r.saving_vs_s1 = 1.0 - static_cast<double>(r.total_m10k) / static_cast<double>(2 * r.rcu_blocks);
    return r;
}

ResourceReport m10k_count(const CamGeometry& geometry) {
    return m10k_count(geometry.architecture(), geometry.depth(), geometry.word_width());
}

double memory_saving(const ResourceReport& advanced, const ResourceReport& s1) {
    if (advanced.depth != s1.depth || advanced.word_width != s1.word_width)
        throw GeometryError("memory saving needs reports for the same depth and width");
    if (s1.total_m10k == 0) throw GeometryError("empty baseline report");
    return 1.0 - static_cast<double>(advanced.total_m10k) / static_cast<double>(s1.total_m10k);
}

} // namespace rcam
