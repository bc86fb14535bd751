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

#include <charconv>
#include <fstream>
#include <sstream>

namespace maxent {

namespace {

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, std::size_t line) {
    text = trim(text);
    double v = 0.0;
    const auto *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError(line, "invalid number '" + std::string(text) + "'");
    }
    return v;
}

Complex parse_pair(std::string_view text, std::size_t line) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw ParseError(line, "amplitude must be written as [re, im]");
    }
    text = text.substr(1, text.size() - 2);
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
        throw ParseError(line, "amplitude must have exactly two components");
    }
    return {parse_double(text.substr(0, comma), line), parse_double(text.substr(comma + 1), line)};
}

} // namespace

std::string format_state_file(const StateFile &file) {
    std::ostringstream out;
    out << "format: " << kStateFormat << '\n';
    out << "n_qubits: " << file.n_qubits << '\n';
    if (file.label) {
        out << "label: " << *file.label << '\n';
    }
    out << "amplitudes:\n";
    for (const auto &a : file.amplitudes) {
        out << '[' << shortest(a.real()) << ", " << shortest(a.imag()) << "]\n";
    }
    return out.str();
}

std::string format_state_file(const StateVector &state, std::optional<std::string> label) {
    return format_state_file(
        StateFile{state.n_qubits(), std::move(label),
                  std::vector<Complex>(state.amplitudes().begin(), state.amplitudes().end())});
}

StateFile parse_state_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    StateFile file;
    bool have_format = false;
    bool have_n = false;
    bool in_amplitudes = false;
    std::size_t amplitudes_line = 0;

    while (std::getline(in, raw)) {
        ++line;
        const auto content = trim(raw);
        if (content.empty() || content.front() == '#') {
            continue;
        }
        if (in_amplitudes) {
            if (file.amplitudes.size() == (std::size_t{1} << file.n_qubits)) {
                throw ParseError(line, "more than 2^n_qubits amplitude pairs");
            }
            file.amplitudes.push_back(parse_pair(content, line));
            continue;
        }
        const auto colon = content.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(line, "expected 'key: value'");
        }
        const auto key = trim(content.substr(0, colon));
        const auto value = trim(content.substr(colon + 1));
        if (!have_format && key != "format") {
            throw ParseError(line, "first field must be 'format'");
        }
        if (key == "format") {
            if (have_format) {
                throw ParseError(line, "duplicate field 'format'");
            }
            if (value != kStateFormat) {
                throw ParseError(line, "unsupported format '" + std::string(value) +
                                           "', expected " + std::string(kStateFormat));
            }
            have_format = true;
        } else if (key == "n_qubits") {
            if (have_n) {
                throw ParseError(line, "duplicate field 'n_qubits'");
            }
            std::size_t n = 0;
            const auto *end = value.data() + value.size();
            auto [ptr, ec] = std::from_chars(value.data(), end, n);
            if (value.empty() || ec != std::errc{} || ptr != end || n < 1 || n > kMaxQubits) {
                throw ParseError(line, "n_qubits must be an integer in 1..8");
            }
            file.n_qubits = n;
            have_n = true;
        } else if (key == "label") {
            file.label = std::string(value);
        } else if (key == "amplitudes") {
            if (!value.empty()) {
                throw ParseError(line, "amplitude pairs go on the following lines");
            }
            if (!have_n) {
                throw ParseError(line, "n_qubits must precede amplitudes");
            }
            in_amplitudes = true;
            amplitudes_line = line;
        } else {
            throw ParseError(line, "unknown field '" + std::string(key) + "'");
        }
    }
    // Missing fields are reported at the end of input.
    if (!have_format) {
        throw ParseError(line, "missing field 'format'");
    }
    if (!have_n) {
        throw ParseError(line, "missing field 'n_qubits'");
    }
    if (!in_amplitudes) {
        throw ParseError(line, "missing field 'amplitudes'");
    }
    const std::size_t expected = std::size_t{1} << file.n_qubits;
    if (file.amplitudes.size() != expected) {
        throw ParseError(amplitudes_line, "expected " + std::to_string(expected) +
                                              " amplitude pairs, found " +
                                              std::to_string(file.amplitudes.size()));
    }
    return file;
}

StateVector to_state(const StateFile &file) {
    try {
        return from_amplitudes(file.amplitudes);
    } catch (const Error &e) {
        throw ParseError(0, e.what());
    }
}

StateVector read_state(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return to_state(parse_state_file(buf.str()));
}

void write_state(const std::filesystem::path &path, const StateVector &state,
                 std::optional<std::string> label) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << format_state_file(state, std::move(label));
}

} // namespace maxent
