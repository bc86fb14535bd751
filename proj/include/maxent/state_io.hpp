// Copyright 2026 The maxent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxent/states.hpp"

namespace maxent {

inline constexpr std::string_view kStateFormat = "maxent-state/1";

/// Canonical state document:
///
///   format: maxent-state/1
///   n_qubits: 2
///   label: bell                  (optional)
///   amplitudes:
///   [0.7071067811865476, 0]
///   [0, 0]
///   ...                          (2^n pairs in basis order)
///
/// Blank lines and lines starting with '#' are ignored. Numbers are written
/// in shortest round-trip form, so write -> read is bit-exact.
struct StateFile {
    std::size_t n_qubits = 0;
    std::optional<std::string> label;
    std::vector<Complex> amplitudes;
};

std::string format_state_file(const StateFile &file);
std::string format_state_file(const StateVector &state, std::optional<std::string> label = {});

/// Throws ParseError with the offending line number.
StateFile parse_state_file(std::string_view text);

/// Parses and normalizes. Zero vectors surface as ParseError.
StateVector to_state(const StateFile &file);

StateVector read_state(const std::filesystem::path &path);
void write_state(const std::filesystem::path &path, const StateVector &state,
                 std::optional<std::string> label = {});

} // namespace maxent
