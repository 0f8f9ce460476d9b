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

#include <doctest.h>

#include "rcam/errors.hpp"
#include "rcam/resource_model.hpp"

using namespace rcam;

namespace {

// Blocks from first principles: every RCU is one 8,192-bit block holding a
// 256 x 32 slice; the S1 erase RAM mirrors each RCU, the shared erase RAM
// holds N*W bits.
std::size_t oracle_blocks(Architecture arch, std::size_t n, std::size_t w) {
    const std::size_t rcus = (n / 32) * (w / 8);
    if (arch == Architecture::S1) return 2 * rcus;
    return rcus + (n * w + 8191) / 8192;
}

} // namespace

TEST_CASE("flagship block counts") {
    const auto s1 = m10k_count(Architecture::S1, 65536, 8);
    const auto s2 = m10k_count(Architecture::S2, 65536, 8);
    const auto s3 = m10k_count(Architecture::S3, 65536, 8);
    CHECK(s1.rcu_blocks == 2048);
    CHECK(s1.erase_blocks == 2048);
    CHECK(s1.total_m10k == 4096);
    CHECK(s2.total_m10k == 2112);
    CHECK(s3.total_m10k == 2112);
    CHECK(s2.erase_blocks == 64);
    CHECK(memory_saving(s2, s1) == doctest::Approx(0.484375));
    CHECK(s2.saving_vs_s1 == doctest::Approx(0.484375));
    CHECK(s2.device_fraction == doctest::Approx(2112.0 / 2854.0));
    CHECK(s2.device_fraction == doctest::Approx(0.74).epsilon(0.01));
}

TEST_CASE("tiny table") {
    CHECK(m10k_count(Architecture::S1, 32, 8).total_m10k == 2);
    const auto s1 = m10k_count(Architecture::S1, 64, 8);
    const auto s3 = m10k_count(Architecture::S3, 64, 8);
    CHECK(s1.total_m10k == 4);
    CHECK(s3.total_m10k == 3);
    CHECK(memory_saving(s3, s1) == doctest::Approx(0.25));
}

TEST_CASE("saving edge cases") {
    const auto a = m10k_count(Architecture::S2, 4096, 16);
    CHECK(memory_saving(a, a) == 0.0);
    CHECK_THROWS_AS(memory_saving(m10k_count(Architecture::S2, 4096, 16), m10k_count(Architecture::S1, 4096, 8)),
                    GeometryError);
    CHECK_THROWS_AS(m10k_count(Architecture::S1, 100, 8), GeometryError);
    CHECK_THROWS_AS(m10k_count(Architecture::S2, 4096, 12), GeometryError);
}

TEST_CASE("counts agree with the block oracle") {
    for (auto arch : {Architecture::S1, Architecture::S2, Architecture::S3})
        for (std::size_t w : {8, 16, 32, 64})
            for (std::size_t n : {1024, 4096, 8192, 65536})
                REQUIRE(m10k_count(arch, n, w).total_m10k == oracle_blocks(arch, n, w));
}

TEST_CASE("S2 and S3 use the same memory; S1 doubles its RCU count") {
    for (std::size_t w : {8, 16, 32, 64})
        for (std::size_t n : {1024, 8192, 65536}) {
            const auto s1 = m10k_count(Architecture::S1, n, w);
            REQUIRE(m10k_count(Architecture::S2, n, w).total_m10k == m10k_count(Architecture::S3, n, w).total_m10k);
            REQUIRE(s1.total_m10k == 2 * s1.rcu_blocks);
        }
}

TEST_CASE("saving approaches 31/64 from below") {
    double previous = 0.0;
    for (std::size_t n = 256; n <= (1u << 20); n *= 2) {
        const double s = memory_saving(m10k_count(Architecture::S2, n, 8), m10k_count(Architecture::S1, n, 8));
        REQUIRE(s <= 31.0 / 64.0 + 1e-12);
        REQUIRE(s >= previous - 1e-12);
        previous = s;
    }
    CHECK(previous == doctest::Approx(31.0 / 64.0));
}

TEST_CASE("erase RAM utilization") {
    // Each S1 erase block stores one 256-bit column image out of 8,192 bits.
    const auto s1 = m10k_count(Architecture::S1, 65536, 8);
    CHECK(s1.erase_utilization == doctest::Approx(256.0 / 8192.0));
    CHECK(s1.erase_utilization * 100 == doctest::Approx(3.2).epsilon(0.1 / 3.2));
    CHECK(m10k_count(Architecture::S2, 65536, 8).erase_utilization == doctest::Approx(1.0));
    CHECK(m10k_count(Architecture::S3, 1024, 8).erase_utilization == doctest::Approx(1.0));
}

TEST_CASE("geometry overload matches") {
    const auto g = CamGeometry::make(Architecture::S3, 8192, 32);
    const auto a = m10k_count(g);
    const auto b = m10k_count(Architecture::S3, 8192, 32);
    CHECK(a.total_m10k == b.total_m10k);
    CHECK(a.architecture == Architecture::S3);
}
