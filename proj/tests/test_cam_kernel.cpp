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

#include <array>
#include <random>

#include "rcam/cam_kernel.hpp"
#include "rcam/errors.hpp"
#include "support/oracles.hpp"

using namespace rcam;

TEST_CASE("rcu_write sets and clears a single cell") {
    RcuState rcu;
    rcu.write(5, 3, true);
    for (std::size_t r = 0; r < kRcuRows; ++r)
        for (std::size_t s = 0; s < kRcuSlots; ++s) CHECK(rcu.cell(r, s) == (r == 5 && s == 3));
    rcu.write(5, 3, false);
    CHECK(rcu.all_zero());

    CHECK_THROWS_AS(rcu.write(256, 0, true), RangeError);
    CHECK_THROWS_AS(rcu.write(0, 32, true), RangeError);
}

TEST_CASE("rcu_write matches a cell-assignment replay") {
    std::mt19937_64 rng(1);
    RcuState rcu;
    std::array<std::array<bool, kRcuSlots>, kRcuRows> cells{};
    for (int i = 0; i < 1000; ++i) {
        const std::size_t row = rng() % kRcuRows;
        const std::size_t slot = rng() % kRcuSlots;
        const bool bit = rng() & 1;
        rcu.write(row, slot, bit);
        cells[row][slot] = bit;
    }
    for (std::size_t r = 0; r < kRcuRows; ++r)
        for (std::size_t s = 0; s < kRcuSlots; ++s) REQUIRE(rcu.cell(r, s) == cells[r][s]);
}

TEST_CASE("rcu_search reads one row") {
    RcuState rcu;
    for (std::size_t key = 0; key < kRcuRows; ++key) CHECK(rcu.search(key) == 0u);
    rcu.write(5, 3, true);
    CHECK(rcu.search(5) == (1u << 3));
    CHECK(rcu.search(6) == 0u);
    CHECK_THROWS_AS(rcu.search(256), RangeError);

    SUBCASE("32 stored bytes agree with a linear scan") {
        std::mt19937_64 rng(9);
        RcuState full;
        std::array<std::uint8_t, kRcuSlots> stored{};
        for (std::size_t s = 0; s < kRcuSlots; ++s) {
            stored[s] = static_cast<std::uint8_t>(rng());
            full.write(stored[s], s, true);
        }
        for (std::size_t key = 0; key < kRcuRows; ++key) {
            std::uint32_t expect = 0;
            for (std::size_t s = 0; s < kRcuSlots; ++s)
                if (stored[s] == key) expect |= 1u << s;
            REQUIRE(full.search(key) == expect);
        }
    }
}

TEST_CASE("word index map, bit-sliced ordering") {
    const auto s2 = CamGeometry::make(Architecture::S2, 65536, 8);
    CHECK(s2.words_per_beat_k() == 32);
    CHECK(s2.rcb_count() == 64);
    CHECK(s2.locate(0) == WordLocation{0, 0, 0});
    CHECK(s2.locate(31) == WordLocation{0, 0, 31});
    CHECK(s2.locate(32) == WordLocation{0, 1, 0});
    CHECK(s2.locate(1023) == WordLocation{0, 31, 31});
    CHECK(s2.locate(1024) == WordLocation{1, 0, 0});
    CHECK_THROWS_AS(s2.locate(65536), RangeError);

    const auto s3 = CamGeometry::make(Architecture::S3, 65536, 8);
    CHECK(s3.words_per_beat_k() == 256);
    CHECK(s3.rcb_count() == 8);
    CHECK(s3.partitions() == 8);
    CHECK(s3.locate(255) == WordLocation{0, 0, 255});
    CHECK(s3.locate(256) == WordLocation{0, 1, 0});
}

TEST_CASE("word index map is a bijection for every geometry up to 2^16 words") {
    for (auto arch : {Architecture::S1, Architecture::S2, Architecture::S3}) {
        for (std::size_t w : {8, 16, 32, 64}) {
            const std::size_t n = 65536 * 8 / w;
            const auto g = CamGeometry::make(arch, n, w);
            std::vector<bool> seen(n, false);
            for (std::size_t v = 0; v < n; ++v) {
                const WordLocation loc = g.locate(v);
                REQUIRE(loc.group < kRcuSlots);
                REQUIRE(loc.position < g.words_per_beat_k());
                REQUIRE(loc.rcb < g.rcb_count());
                const std::size_t flat = (loc.rcb * kRcuSlots + loc.group) * g.words_per_beat_k() + loc.position;
                REQUIRE_FALSE(seen[flat]);
                seen[flat] = true;
                REQUIRE(g.word_index(loc) == v);
            }
        }
    }
}

TEST_CASE("geometry validation") {
    CHECK_THROWS_AS(CamGeometry::make(Architecture::S2, 0, 8), GeometryError);
    CHECK_THROWS_AS(CamGeometry::make(Architecture::S2, 1024, 12), GeometryError);
    CHECK_THROWS_AS(CamGeometry::make(Architecture::S2, 1024, 24), GeometryError);
    CHECK_THROWS_AS(CamGeometry::make(Architecture::S2, 1000, 8), GeometryError);
    CHECK_THROWS_AS(CamGeometry::make(Architecture::S3, 65536, 8, 256, 3), GeometryError);
    CHECK_THROWS_AS(CamGeometry::make(Architecture::S3, 65536, 8, 256, 1), GeometryError);

    const auto g = CamGeometry::make(Architecture::S2, 8192, 64);
    CHECK(g.words_per_beat_k() == 4);
    CHECK(g.slices() == 8);
    CHECK(g.rcu_count() == 2048);
    CHECK(g.beat_count() == 2048);
}

namespace {

/// Managed write: erase whatever the word held, then store the new value.
void managed_write(CamArray& cam, std::vector<std::uint64_t>& shadow, std::size_t word, std::uint64_t value) {
    if (cam.occupied(word)) cam.write_word(word, shadow[word], false);
    cam.write_word(word, value, true);
    cam.mark_occupied(word);
    shadow[word] = value;
}

MatchVector scan_vector(const std::vector<std::uint64_t>& words, const CamArray& cam, std::uint64_t key) {
    MatchVector m(words.size());
    for (std::size_t i : testing::scan_positions(words, key))
        if (cam.occupied(i)) m.set(i);
    return m;
}

} // namespace

TEST_CASE("assemble_match") {
    SUBCASE("a single stored word produces one bit") {
        const auto g = CamGeometry::make(Architecture::S2, 2048, 8);
        CamArray cam(g);
        cam.write_word(1500, 0x42, true);
        cam.mark_occupied(1500);
        const MatchVector m = cam.search(0x42);
        CHECK(m.count() == 1);
        CHECK(m.test(1500));
        CHECK(cam.search(0x43).none());
    }

    SUBCASE("W=16 suppresses partial matches") {
        const auto g = CamGeometry::make(Architecture::S2, 1024, 16);
        CamArray cam(g);
        cam.write_word(3, 0x12AB, true);
        CHECK(cam.search(0x34AB).none());
        CHECK(cam.search(0x12CD).none());
        CHECK(cam.search(0x12AB).test(3));
    }

    SUBCASE("wrong vector count is a structural error") {
        const auto g = CamGeometry::make(Architecture::S2, 1024, 16);
        std::vector<std::uint32_t> too_few(g.rcu_count() - 1, 0);
        CHECK_THROWS_AS(assemble_match(g, too_few), GeometryError);
    }

    SUBCASE("search key wider than the word is rejected") {
        CamArray cam(CamGeometry::make(Architecture::S2, 1024, 16));
        CHECK_THROWS_AS(cam.search(0x10000), RangeError);
    }
}

TEST_CASE("1,024-word W=16 CAM agrees with a scan for all 2^16 keys") {
    for (auto arch : {Architecture::S1, Architecture::S2, Architecture::S3}) {
        const auto g = CamGeometry::make(arch, 1024, 16);
        CamArray cam(g);
        std::vector<std::uint64_t> shadow(1024, 0);
        // Low-entropy values so many keys hit several words.
        std::mt19937_64 rng(77);
        for (std::size_t i = 0; i < 1024; ++i) managed_write(cam, shadow, i, (rng() % 64) * 0x0101 ^ (rng() % 3));
        for (std::uint64_t key = 0; key < 65536; ++key) REQUIRE(cam.search(key) == scan_vector(shadow, cam, key));
    }
}

TEST_CASE("search/store consistency under rewrites") {
    const auto g = CamGeometry::make(Architecture::S3, 4096, 32);
    CamArray cam(g);
    std::vector<std::uint64_t> shadow(4096, 0);
    std::mt19937_64 rng(5);
    for (int round = 0; round < 4; ++round) {
        for (std::size_t i = 0; i < 4096; ++i) managed_write(cam, shadow, i, rng() % 512);
        for (int probe = 0; probe < 200; ++probe) {
            const std::uint64_t key = rng() % 512;
            REQUIRE(cam.search(key) == scan_vector(shadow, cam, key));
        }
    }
    // Managed operation leaves at most one set bit per RCU column.
    for (const auto& rcu : cam.rcus())
        for (std::size_t s = 0; s < kRcuSlots; ++s) REQUIRE(rcu.column_population(s) <= 1);
}

TEST_CASE("width AND-law: global match = AND of per-slice matches") {
    for (std::size_t w : {16, 32, 64}) {
        const auto g = CamGeometry::make(Architecture::S2, 2048, w);
        CamArray cam(g);
        std::vector<std::uint64_t> shadow(2048, 0);
        std::mt19937_64 rng(w);
        for (std::size_t i = 0; i < 2048; ++i) {
            // Bytes drawn from a tiny alphabet so slices match often on their own.
            std::uint64_t v = 0;
            for (std::size_t c = 0; c < w / 8; ++c) v |= (rng() % 3) << (8 * c);
            managed_write(cam, shadow, i, v);
        }
        for (int t = 0; t < 50; ++t) {
            std::uint64_t key = 0;
            for (std::size_t c = 0; c < w / 8; ++c) key |= (rng() % 3) << (8 * c);

            MatchVector anded(2048);
            for (std::size_t i = 0; i < 2048; ++i) anded.set(i);
            for (std::size_t c = 0; c < g.slices(); ++c) {
                // Slice c alone: other slices report every slot.
                std::vector<std::uint32_t> vectors(g.rcu_count(), 0xFFFFFFFFu);
                for (std::size_t r = c; r < g.rcu_count(); r += g.slices())
                    vectors[r] = cam.rcus()[r].search((key >> (8 * c)) & 0xFF);
                const MatchVector slice = assemble_match(g, vectors);
                for (std::size_t i = 0; i < 2048; ++i) {
                    const bool byte_eq = ((shadow[i] >> (8 * c)) & 0xFF) == ((key >> (8 * c)) & 0xFF);
                    REQUIRE(slice.test(i) == byte_eq);
                    if (!slice.test(i)) anded.reset(i);
                }
            }
            REQUIRE(cam.search(key) == anded);
        }
    }
}

TEST_CASE("skipping the erase leaves a detectable false positive") {
    const auto g = CamGeometry::make(Architecture::S2, 1024, 8);
    CamArray cam(g);
    cam.write_word(10, 0x11, true);
    cam.mark_occupied(10);
    // Rewrite word 10 without clearing 0x11 first.
    cam.write_word(10, 0x22, true);
    std::vector<std::uint64_t> shadow(1024, 0);
    shadow[10] = 0x22;
    const auto loc = g.locate(10);
    CHECK(cam.rcu(loc.rcb, loc.position, 0).column_population(loc.group) == 2);
    CHECK(cam.search(0x11) != scan_vector(shadow, cam, 0x11));
    CHECK(cam.search(0x11).test(10));
}

TEST_CASE("search is pure") {
    const auto g = CamGeometry::make(Architecture::S3, 8192, 64);
    CamArray cam(g);
    const auto words = testing::random_words(3, 8192, 64);
    for (std::size_t i = 0; i < words.size(); ++i) cam.write_word(i, words[i], true);
    const std::uint64_t before = cam.digest();
    for (std::size_t i = 0; i < 100; ++i) (void)cam.search(words[i * 37]);
    CHECK(cam.digest() == before);
}

TEST_CASE("empty CAM never matches") {
    CamArray cam(CamGeometry::make(Architecture::S1, 1024, 8));
    for (std::uint64_t key = 0; key < 256; ++key) REQUIRE(cam.search(key).none());
}
