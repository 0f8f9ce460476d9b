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

#include <stdexcept>
#include <string>

namespace rcam {

/// An index (slot, row, word, beat) outside the addressed structure.
class RangeError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Structural parameters that cannot describe a buildable CAM, or two
/// objects whose shapes disagree.
class GeometryError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Bad configuration value (CLI flag, config file, calibration target).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A simulated system disagreed with the reference model or broke one of
/// its own invariants.
class InvariantError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace rcam
