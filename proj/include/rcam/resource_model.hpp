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

#include "rcam/geometry.hpp"

namespace rcam {

/// M10K blocks on the reference device (2,112 blocks = 74% of it).
inline constexpr std::size_t kDeviceM10kBlocks = 2854;

struct ResourceReport {
    Architecture architecture = Architecture::S1;
    std::size_t depth = 0;
    std::size_t word_width = 0;
    std::size_t rcu_blocks = 0;
    std::size_t erase_blocks = 0;
    std::size_t total_m10k = 0;
    /// total_m10k / kDeviceM10kBlocks
    double device_fraction = 0.0;
    /// Share of erase-RAM block capacity holding word data.
    double erase_utilization = 0.0;
    /// 1 - total / total(S1) at the same depth and width.
    double saving_vs_s1 = 0.0;
};

/// Block count of one RCAM: one M10K per RCU, plus either one erase block
/// per RCU (S1) or a shared erase RAM of ceil(N*W / 8,192) blocks (S2, S3).
ResourceReport m10k_count(Architecture arch, std::size_t depth, std::size_t word_width);
ResourceReport m10k_count(const CamGeometry& geometry);

/// 1 - total(advanced) / total(s1). Both reports must describe the same
/// depth and width.
double memory_saving(const ResourceReport& advanced, const ResourceReport& s1);

} // namespace rcam
