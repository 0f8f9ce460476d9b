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
#include <optional>

#include "rcam/geometry.hpp"
#include "rcam/memory_model.hpp"

namespace rcam {

/// Measured I/O efficiencies to fit, as fractions of peak bandwidth.
struct CalibrationTargets {
    std::optional<double> s1;
    std::optional<double> s2;
    std::optional<double> s3;
};

struct CalibrationGrid {
    double eta_min = 0.900;
    double eta_max = 1.000;
    double eta_step = 0.001;
    double overhead_min = 0.0;
    double overhead_max = 4.0;
    double overhead_step = 0.05;
};

/// Where each architecture is simulated while fitting. S1 is fitted at its
/// widest word (its efficiency grows with W); S2 and S3 do not depend on W.
struct CalibrationPoints {
    std::size_t s1_depth = 8192;
    std::size_t s1_width = 64;
    std::size_t depth = 65536;
    std::size_t width = 8;
    std::size_t partitions = 8;
};

struct CalibrationResult {
    BusModel bus;
    std::optional<double> s1_efficiency;
    std::optional<double> s2_efficiency;
    std::optional<double> s3_efficiency;
    /// target - achieved, absolute fractions.
    std::optional<double> s1_residual;
    std::optional<double> s2_residual;
    std::optional<double> s3_residual;
    double max_relative_error = 0.0;
};

/// Measured efficiencies of the reference 256-bit, 100 MHz system: S1 at
/// 64-bit words, S2 and S3 at any width.
inline constexpr double kReferenceS1Efficiency = 0.101;
inline constexpr double kReferenceS2Efficiency = 0.498;
inline constexpr double kReferenceS3Efficiency = 0.968;

inline CalibrationTargets reference_targets() {
    return {kReferenceS1Efficiency, kReferenceS2Efficiency, kReferenceS3Efficiency};
}

/// Simulated I/O efficiency of one architecture at one geometry.
double simulate_efficiency(Architecture arch, std::size_t depth, std::size_t width, const BusModel& bus,
                           std::size_t partitions = 8);

/// Grid search over (stream efficiency, burst overhead) minimizing the
/// largest relative error against the given targets, running the real
/// engines at every grid point. The burst overhead only moves S1 and the
/// stream efficiency only moves S2/S3, so the two axes are searched
/// independently; ties prefer the smaller total error, then the value
/// closest to an ideal bus.
CalibrationResult calibrate(const BusModel& base, const CalibrationTargets& targets,
                            const CalibrationGrid& grid = {}, const CalibrationPoints& points = {});

/// Residuals of an already chosen bus against `targets`, no fitting.
CalibrationResult evaluate_calibration(const BusModel& bus, const CalibrationTargets& targets,
                                       const CalibrationPoints& points = {});

} // namespace rcam
