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

#include "maxent/state_io.hpp"

#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"
#include "maxent/search.hpp"

using namespace maxent;

namespace {

int parse_error_line(std::string_view text) {
    try {
        parse_state_file(text);
    } catch (const ParseError &e) {
        return static_cast<int>(e.line());
    }
    return -1;
}

} // namespace

TEST(StateFile, canonical_text) {
    const auto text = format_state_file(ghz(Sign::minus), "ghz-");
    EXPECT_EQ(text,
              "format: maxent-state/1\n"
              "n_qubits: 3\n"
              "label: ghz-\n"
              "amplitudes:\n"
              "[0.7071067811865475, 0]\n"
              "[0, 0]\n[0, 0]\n[0, 0]\n[0, 0]\n[0, 0]\n[0, 0]\n"
              "[-0.7071067811865475, 0]\n");
}

TEST(StateFile, round_trip_is_bit_exact) {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = haar_random_state(1 + trial % 6, rng);
        const auto back = to_state(parse_state_file(format_state_file(s)));
        ASSERT_EQ(back.dim(), s.dim());
        for (std::size_t k = 0; k < s.dim(); ++k) {
            EXPECT_EQ(back[k], s[k]);
        }
    }
}

TEST(StateFile, comments_blank_lines_and_normalization) {
    const auto file = parse_state_file("# bell, unnormalized\n"
                                       "format: maxent-state/1\n\n"
                                       "n_qubits: 2\n"
                                       "amplitudes:\n"
                                       "[1, 0]\n[0, 0]\n# gap\n[0, 0]\n[1e0, -0.0]\n");
    EXPECT_FALSE(file.label.has_value());
    const auto s = to_state(file);
    EXPECT_NEAR(s[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s[3].real(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(StateFile, errors_report_line_numbers) {
    EXPECT_EQ(parse_error_line("n_qubits: 1\n"), 1);
    EXPECT_EQ(parse_error_line("format: maxent-state/2\n"), 1);
    EXPECT_EQ(parse_error_line("format: maxent-state/1\nn_qubits: x\n"), 2);
    EXPECT_EQ(parse_error_line("format: maxent-state/1\nn_qubits: 1\nn_qubits: 1\n"), 3);
    EXPECT_EQ(parse_error_line("format: maxent-state/1\nn_qubits: 1\ncolour: red\n"), 3);
    EXPECT_EQ(parse_error_line("format: maxent-state/1\nn_qubits: 1\namplitudes:\n[1, 0]\n[1 0]\n"), 5);
    EXPECT_EQ(parse_error_line("format: maxent-state/1\nn_qubits: 1\namplitudes:\n[1, 0]\n[0, 0]\n[0, 0]\n"),
              6);
    EXPECT_GT(parse_error_line("format: maxent-state/1\nn_qubits: 2\namplitudes:\n[1, 0]\n"), 0);
    EXPECT_EQ(parse_error_line("format: maxent-state/1\namplitudes:\n[1, 0]\n[0, 0]\n"), 2);
    EXPECT_EQ(parse_error_line("format: maxent-state/1\n"), 1);

    const auto zero = parse_state_file("format: maxent-state/1\nn_qubits: 1\namplitudes:\n[0, 0]\n[0, 0]\n");
    EXPECT_THROW(to_state(zero), ParseError);
    EXPECT_THROW(parse_state_file("format: maxent-state/1\nn_qubits: 9\n"), ParseError);
}

TEST(StateFile, read_and_write_paths) {
    const auto dir = std::filesystem::temp_directory_path() / "maxent_state_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "s.state";
    const auto s = named_example(NamedExample::three_qubit_nontrivial);
    write_state(path, s, "nontrivial");
    const auto back = read_state(path);
    for (std::size_t k = 0; k < s.dim(); ++k) {
        EXPECT_EQ(back[k], s[k]);
    }
    EXPECT_THROW(read_state(dir / "missing.state"), Error);
    std::filesystem::remove_all(dir);
}
