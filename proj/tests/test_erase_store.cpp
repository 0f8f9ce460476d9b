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

#include <map>
#include <random>

#include "rcam/erase_store.hpp"
#include "rcam/errors.hpp"
#include "rcam/update_engines.hpp"

using namespace rcam;

namespace {

WideWord random_beat(std::mt19937_64& rng, std::size_t width) {
    WideWord w(width);
    for (auto& l : w.limbs()) l = rng();
    return w;
}

} // namespace

TEST_CASE("per-unit erase RAM swaps read-before-write") {
    PerUnitEraseRam eram;
    CHECK(eram.swap(3, 0xAB) == 0x00);
    CHECK(eram.swap(3, 0xCD) == 0xAB);
    CHECK(eram.at(3) == 0xCD);
    CHECK_THROWS_AS(eram.swap(32, 0), RangeError);
}

TEST_CASE("per-unit erase RAM replays 10,000 random swaps") {
    PerUnitEraseRam eram;
    std::map<std::size_t, std::uint8_t> last;
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10000; ++i) {
        const std::size_t slot = rng() % kRcuSlots;
        const auto value = static_cast<std::uint8_t>(rng());
        const std::uint8_t expect = last.count(slot) ? last[slot] : 0;
        REQUIRE(eram.swap(slot, value) == expect);
        last[slot] = value;
    }
}

TEST_CASE("central erase RAM") {
    const auto g = CamGeometry::make(Architecture::S2, 65536, 8);
    CentralEraseRam eram(g);
    CHECK(eram.rows() == 2048);
    CHECK(eram.width() == 256);
    CHECK(eram.rows() * eram.width() == 65536u * 8u);

    std::mt19937_64 rng(4);
    const WideWord x = random_beat(rng, 256);
    const WideWord y = random_beat(rng, 256);
    CHECK(eram.load_beat(0, x).is_zero());
    CHECK(eram.read_row(0) == x);
    CHECK(eram.load_beat(0, y) == x);
    CHECK(eram.read_row(0) == y);
    CHECK_THROWS_AS(eram.load_beat(2048, x), RangeError);
    CHECK_THROWS_AS(eram.read_row(2048), RangeError);
    CHECK_THROWS_AS(eram.load_beat(0, WideWord(128)), GeometryError);

    SUBCASE("second full fill returns the first in order") {
        CentralEraseRam fresh(g);
        std::vector<WideWord> first;
        for (std::size_t r = 0; r < fresh.rows(); ++r) {
            first.push_back(random_beat(rng, 256));
            REQUIRE(fresh.load_beat(r, first.back()).is_zero());
        }
        for (std::size_t r = 0; r < fresh.rows(); ++r) {
            REQUIRE(fresh.read_row(r) == first[r]);
            REQUIRE(fresh.load_beat(r, random_beat(rng, 256)) == first[r]);
        }
    }
}

TEST_CASE("partitioned erase RAM") {
    const auto g = CamGeometry::make(Architecture::S3, 65536, 8);
    HPartEraseRam eram(g);
    CHECK(eram.partitions() == 8);
    CHECK(eram.rows_per_partition() == 256);
    CHECK(eram.width() == 256);
    CHECK(eram.read_wide(0).width() == 2048);
    CHECK(eram.read_wide(0).is_zero());

    std::mt19937_64 rng(6);
    std::vector<WideWord> beats;
    for (std::size_t b = 0; b < 8; ++b) {
        beats.push_back(random_beat(rng, 256));
        eram.load_beat(b, beats.back());
    }
    // Beats 0..7 fill row 0 of every partition and leave row 1 alone.
    for (std::size_t p = 0; p < 8; ++p) {
        CHECK(eram.partition_row(p, 0) == beats[p]);
        CHECK(eram.partition_row(p, 1).is_zero());
    }
    CHECK(eram.read_wide(0) == WideWord::concat(beats));

    const WideWord ninth = random_beat(rng, 256);
    eram.load_beat(8, ninth);
    CHECK(eram.partition_row(0, 1) == ninth);

    CHECK_THROWS_AS(eram.load_beat(2048, ninth), RangeError);
    CHECK_THROWS_AS(eram.read_wide(256), RangeError);

    SUBCASE("full fill regroups the beat stream eight at a time") {
        HPartEraseRam full(g);
        std::vector<WideWord> stream;
        for (std::size_t b = 0; b < 2048; ++b) {
            stream.push_back(random_beat(rng, 256));
            full.load_beat(b, stream.back());
        }
        for (std::size_t row = 0; row < 256; ++row) {
            std::vector<WideWord> group(stream.begin() + row * 8, stream.begin() + row * 8 + 8);
            REQUIRE(full.read_wide(row) == WideWord::concat(group));
        }
    }
}

TEST_CASE("beat fields line up with the word index map") {
    for (auto arch : {Architecture::S2, Architecture::S3}) {
        for (std::size_t w : {8, 16, 32, 64}) {
            const std::size_t n = 16384 * 8 / w;
            const auto g = CamGeometry::make(arch, n, w);
            UpdatePayload payload{w, std::vector<std::uint64_t>(n)};
            for (std::size_t v = 0; v < n; ++v) payload.words[v] = (v * 2654435761u) & g.word_mask();
            const auto beats = pack_beats(payload, g);

            if (arch == Architecture::S2) {
                CentralEraseRam eram(g);
                for (std::size_t b = 0; b < beats.size(); ++b) eram.load_beat(b, beats[b]);
                for (std::size_t v = 0; v < n; ++v) {
                    const std::size_t k = g.words_per_beat_k();
                    REQUIRE(eram.read_row(v / k).field(v % k, w) == payload.words[v]);
                    const WordLocation loc = g.locate(v);
                    REQUIRE(loc.position == v % k);
                    REQUIRE(loc.rcb * kRcuSlots + loc.group == v / k);
                }
            } else {
                HPartEraseRam eram(g);
                for (std::size_t b = 0; b < beats.size(); ++b) eram.load_beat(b, beats[b]);
                for (std::size_t v = 0; v < n; ++v) {
                    const std::size_t k = g.words_per_beat_k();
                    REQUIRE(eram.read_wide(v / k).field(v % k, w) == payload.words[v]);
                    const WordLocation loc = g.locate(v);
                    REQUIRE(loc.position == v % k);
                    REQUIRE(loc.rcb * kRcuSlots + loc.group == v / k);
                }
            }
        }
    }
}
