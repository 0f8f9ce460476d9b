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

#include <random>

#include "rcam/errors.hpp"
#include "rcam/memory_model.hpp"
#include "support/oracles.hpp"

using namespace rcam;

TEST_CASE("bus model basics") {
    const BusModel bus = BusModel::ideal();
    CHECK(bus.theoretical_gbps() == doctest::Approx(25.6));
    CHECK(bus.effective_stream_efficiency() == 1.0);
    CHECK(bus.effective_burst_overhead() == 0.0);

    BusModel knobs = BusModel::calibrated(0.9, 2.0);
    knobs.mode = BusMode::Ideal;
    CHECK(knobs.effective_stream_efficiency() == 1.0);
    CHECK(knobs.effective_burst_overhead() == 0.0);

    CHECK_THROWS_AS(BusModel::calibrated(0.0, 1.0), ConfigError);
    CHECK_THROWS_AS(BusModel::calibrated(1.2, 1.0), ConfigError);
    CHECK_THROWS_AS(BusModel::calibrated(0.9, -1.0), ConfigError);
    CHECK_THROWS_AS(parse_bus_mode("ddr"), ConfigError);
}

TEST_CASE("stream_schedule") {
    SUBCASE("ideal is the identity") {
        const auto s = stream_schedule(BusModel::ideal(), 2048);
        for (std::size_t i = 0; i < s.size(); ++i) REQUIRE(s[i] == static_cast<Cycle>(i));
    }
    SUBCASE("eta 0.5 doubles the span") {
        const auto s = stream_schedule(BusModel::calibrated(0.5, 0.0), 4);
        CHECK(s.back() + 1 == 8);
    }
    SUBCASE("eta 0.968 over 2,048 beats") {
        const auto bus = BusModel::calibrated(0.968, 0.0);
        const auto s = stream_schedule(bus, 2048);
        CHECK(s.back() + 1 == 2116);
        CHECK(s == testing::token_bucket_stream(968000, 2048));

        // One extra cycle every 1 / (1 - eta) = 31.25 cycles, i.e. every 30 or 31 beats.
        std::vector<std::size_t> stalls;
        for (std::size_t i = 1; i < s.size(); ++i) {
            REQUIRE(s[i] - s[i - 1] >= 1);
            REQUIRE(s[i] - s[i - 1] <= 2);
            if (s[i] - s[i - 1] == 2) stalls.push_back(i);
        }
        for (std::size_t i = 1; i < stalls.size(); ++i) {
            const std::size_t gap = stalls[i] - stalls[i - 1];
            REQUIRE((gap == 30 || gap == 31));
        }
    }
    SUBCASE("agrees with the token bucket across efficiencies") {
        for (double eta : {0.9, 0.937, 0.976, 0.999, 1.0}) {
            const auto bus = BusModel::calibrated(eta, 0.0);
            REQUIRE(stream_schedule(bus, 3000) == testing::token_bucket_stream(bus.stream_efficiency_ppm(), 3000));
        }
    }
}

TEST_CASE("discrete_schedule") {
    SUBCASE("no overhead costs one transfer cycle") {
        const std::vector<Cycle> req{0, 5, 6, 20};
        const auto a = discrete_schedule(BusModel::ideal(), req);
        CHECK(a == std::vector<Cycle>{1, 6, 7, 21});
    }
    SUBCASE("back-to-back requests queue behind the previous transfer") {
        const auto a = discrete_schedule(BusModel::calibrated(1.0, 3.0), std::vector<Cycle>{0, 1, 2});
        CHECK(a == std::vector<Cycle>{4, 8, 12});
    }
    SUBCASE("non-monotone requests are rejected") {
        CHECK_THROWS_AS(discrete_schedule(BusModel::ideal(), std::vector<Cycle>{3, 3}), ConfigError);
        CHECK_THROWS_AS(discrete_schedule(BusModel::ideal(), std::vector<Cycle>{3, 1}), ConfigError);
    }
    SUBCASE("1.9-cycle overhead in a closed loop gives a 9.9-cycle beat period") {
        // An S1 shift register at W=64 drains a beat in 8 cycles and asks for
        // the next one in its last busy cycle.
        DiscreteBus bus(BusModel::calibrated(1.0, 1.9));
        Cycle ready = bus.issue(-1);
        const Cycle start = ready;
        for (int beat = 1; beat <= 1000; ++beat) ready = bus.issue(ready + 7);
        const double period = static_cast<double>(ready - start) / 1000.0;
        CHECK(period == doctest::Approx(9.9).epsilon(1e-3));
        CHECK(1.0 / period == doctest::Approx(0.101).epsilon(0.01));
    }
    SUBCASE("seeded requests respect the gap bound") {
        std::mt19937_64 rng(11);
        for (double overhead : {0.0, 0.4, 1.9, 3.25}) {
            std::vector<Cycle> req;
            Cycle t = 0;
            for (int i = 0; i < 1000; ++i) req.push_back(t += 1 + static_cast<Cycle>(rng() % 20));
            const auto a = discrete_schedule(BusModel::calibrated(1.0, overhead), req);
            const auto min_gap = 1 + static_cast<Cycle>(overhead);
            for (std::size_t i = 0; i < a.size(); ++i) {
                REQUIRE(a[i] >= req[i] + min_gap);
                if (i > 0) REQUIRE(a[i] - a[i - 1] >= min_gap);
            }
        }
    }
    SUBCASE("overhead is paid once per burst") {
        BusModel bus = BusModel::calibrated(1.0, 2.0);
        bus.burst_length = 4;
        const auto a = discrete_schedule(bus, std::vector<Cycle>{0, 10, 20, 30, 40});
        CHECK(a == std::vector<Cycle>{3, 11, 21, 31, 43});
    }
}
