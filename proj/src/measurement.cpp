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

#include "maxent/measurement.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "detail/sampling.hpp"
#include "maxent/random.hpp"

namespace maxent {

namespace {

void require_site(std::size_t site, std::size_t n, const char *op) {
    if (site < 1 || site > n) {
        throw DomainError(std::string(op) + ": site " + std::to_string(site) +
                          " out of range 1.." + std::to_string(n));
    }
}

/// Maps the +1/-1 eigenvectors of the chosen Pauli onto |+>/|->.
ComplexMatrix eigenbasis_rotation(PauliAxis axis) {
    const double h = 1.0 / std::numbers::sqrt2;
    constexpr Complex i{0.0, 1.0};
    switch (axis) {
    case PauliAxis::x:
        return {{h, h}, {h, -h}};
    case PauliAxis::y:
        return {{h, -i * h}, {h, i * h}};
    case PauliAxis::z:
        return ComplexMatrix::identity(2);
    }
    throw DomainError("eigenbasis_rotation: invalid axis");
}

double xlogx(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

/// Mutual information of a 2x2 joint table given as (unnormalized) weights.
double table_mutual_information(const std::array<std::array<double, 2>, 2> &joint) {
    const double total = joint[0][0] + joint[0][1] + joint[1][0] + joint[1][1];
    if (!(total > 0.0)) {
        return 0.0;
    }
    double h_joint = 0.0;
    std::array<double, 2> pa{}, pb{};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double p = joint[a][b] / total;
            h_joint -= xlogx(p);
            pa[a] += p;
            pb[b] += p;
        }
    }
    const double h_a = -xlogx(pa[0]) - xlogx(pa[1]);
    const double h_b = -xlogx(pb[0]) - xlogx(pb[1]);
    return std::max(0.0, h_a + h_b - h_joint);
}

std::size_t bit_of(std::size_t index, std::size_t n, std::size_t site) {
    return (index >> (n - site)) & 1U;
}

} // namespace

ComplexMatrix pauli(PauliAxis axis) {
    constexpr Complex i{0.0, 1.0};
    switch (axis) {
    case PauliAxis::x:
        return {{0.0, 1.0}, {1.0, 0.0}};
    case PauliAxis::y:
        return {{0.0, -i}, {i, 0.0}};
    case PauliAxis::z:
        return {{1.0, 0.0}, {0.0, -1.0}};
    }
    throw DomainError("pauli: invalid axis");
}

char axis_char(PauliAxis axis) { return "?xyz"[static_cast<int>(axis)]; }

std::vector<PauliAxis> parse_bases(std::string_view text) {
    std::vector<PauliAxis> bases;
    for (char c : text) {
        switch (c) {
        case 'x':
            bases.push_back(PauliAxis::x);
            break;
        case 'y':
            bases.push_back(PauliAxis::y);
            break;
        case 'z':
            bases.push_back(PauliAxis::z);
            break;
        default:
            throw DomainError(std::string("invalid basis character '") + c +
                              "' (expected x, y or z)");
        }
    }
    return bases;
}

std::string bases_string(std::span<const PauliAxis> bases) {
    std::string s;
    for (auto b : bases) {
        s.push_back(axis_char(b));
    }
    return s;
}

std::vector<Complex> apply_single_site(std::span<const Complex> amplitudes, std::size_t n_qubits,
                                       std::size_t site, const ComplexMatrix &op) {
    require_site(site, n_qubits, "apply_single_site");
    if (op.rows() != 2 || op.cols() != 2) {
        throw SizeError("apply_single_site: operator must be 2x2");
    }
    const std::size_t stride = std::size_t{1} << (n_qubits - site);
    std::vector<Complex> out(amplitudes.size());
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        if (i & stride) {
            continue;
        }
        const Complex lo = amplitudes[i];
        const Complex hi = amplitudes[i | stride];
        out[i] = op(0, 0) * lo + op(0, 1) * hi;
        out[i | stride] = op(1, 0) * lo + op(1, 1) * hi;
    }
    return out;
}

double local_expectation(const StateVector &state, std::size_t site, PauliAxis axis) {
    require_site(site, state.n_qubits(), "local_expectation");
    const auto acted = apply_single_site(state.amplitudes(), state.n_qubits(), site, pauli(axis));
    Complex sum = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        sum += std::conj(state[i]) * acted[i];
    }
    return sum.real();
}

std::array<double, 3> bloch_vector(const StateVector &state, std::size_t site) {
    return {local_expectation(state, site, PauliAxis::x),
            local_expectation(state, site, PauliAxis::y),
            local_expectation(state, site, PauliAxis::z)};
}

double local_variance(const StateVector &state, std::size_t site, PauliAxis axis) {
    const double e = local_expectation(state, site, axis);
    return 1.0 - e * e;
}

double correlation(const StateVector &state, std::size_t site_a, PauliAxis axis_a,
                   std::size_t site_b, PauliAxis axis_b) {
    require_site(site_a, state.n_qubits(), "correlation");
    require_site(site_b, state.n_qubits(), "correlation");
    if (site_a == site_b) {
        throw DomainError("correlation: sites must differ");
    }
    const auto n = state.n_qubits();
    const auto once = apply_single_site(state.amplitudes(), n, site_b, pauli(axis_b));
    const auto twice = apply_single_site(once, n, site_a, pauli(axis_a));
    Complex joint = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        joint += std::conj(state[i]) * twice[i];
    }
    return joint.real() -
           local_expectation(state, site_a, axis_a) * local_expectation(state, site_b, axis_b);
}

CorrelationMatrix correlation_matrix(const StateVector &state, std::size_t site_a,
                                     std::size_t site_b) {
    if (state.n_qubits() < 2) {
        throw SizeError("correlation_matrix: needs at least two qubits");
    }
    CorrelationMatrix m;
    m.site_pair = {site_a, site_b};
    for (std::size_t l = 0; l < 3; ++l) {
        for (std::size_t r = 0; r < 3; ++r) {
            m.t[l][r] = correlation(state, site_a, kAllAxes[l], site_b, kAllAxes[r]);
        }
    }
    return m;
}

std::vector<double> born_distribution(const StateVector &state,
                                      std::span<const PauliAxis> bases) {
    const auto n = state.n_qubits();
    if (bases.size() != n) {
        throw SizeError("born_distribution: need one basis per site (" + std::to_string(n) +
                        "), got " + std::to_string(bases.size()));
    }
    std::vector<Complex> rotated(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t s = 1; s <= n; ++s) {
        if (bases[s - 1] != PauliAxis::z) {
            rotated = apply_single_site(rotated, n, s, eigenbasis_rotation(bases[s - 1]));
        }
    }
    std::vector<double> p(rotated.size());
    for (std::size_t i = 0; i < rotated.size(); ++i) {
        p[i] = std::norm(rotated[i]);
    }
    return p;
}

ShotRecord sample_outcomes(const StateVector &state, std::span<const PauliAxis> bases,
                           std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw DomainError("sample_outcomes: shots must be >= 1");
    }
    const auto distribution = born_distribution(state, bases);
    const auto cdf = detail::cumulative(distribution);
    const std::size_t dim = distribution.size();
    const auto blocks = static_cast<std::int64_t>(detail::block_count(shots, kShotBlock));

    std::vector<std::uint64_t> counts(dim, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(dim, 0);
#pragma omp for schedule(static)
        for (std::int64_t b = 0; b < blocks; ++b) {
            const auto ub = static_cast<std::uint64_t>(b);
            const std::uint64_t n_block = std::min(kShotBlock, shots - ub * kShotBlock);
            detail::sample_block(cdf, distribution, n_block, derive_seed(seed, ub), local);
        }
#pragma omp critical
        for (std::size_t k = 0; k < dim; ++k) {
            counts[k] += local[k];
        }
    }
    return {std::vector<PauliAxis>(bases.begin(), bases.end()), shots, std::move(counts), seed};
}

double mutual_information(const ShotRecord &record, std::size_t site_a, std::size_t site_b) {
    const auto n = record.n_qubits();
    std::vector<double> weights(record.counts.begin(), record.counts.end());
    return mutual_information(weights, n, site_a, site_b);
}

double mutual_information(std::span<const double> distribution, std::size_t n_qubits,
                          std::size_t site_a, std::size_t site_b) {
    require_site(site_a, n_qubits, "mutual_information");
    require_site(site_b, n_qubits, "mutual_information");
    if (distribution.size() != (std::size_t{1} << n_qubits)) {
        throw SizeError("mutual_information: distribution size does not match 2^n");
    }
    std::array<std::array<double, 2>, 2> joint{};
    for (std::size_t i = 0; i < distribution.size(); ++i) {
        joint[bit_of(i, n_qubits, site_a)][bit_of(i, n_qubits, site_b)] += distribution[i];
    }
    return table_mutual_information(joint);
}

double empirical_mean(const ShotRecord &record, std::span<const std::size_t> sites) {
    const auto n = record.n_qubits();
    for (auto s : sites) {
        require_site(s, n, "empirical_mean");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < record.counts.size(); ++i) {
        std::size_t parity = 0;
        for (auto s : sites) {
            parity ^= bit_of(i, n, s);
        }
        sum += (parity ? -1.0 : 1.0) * static_cast<double>(record.counts[i]);
    }
    return sum / static_cast<double>(record.shots);
}

std::string format_shot_record(const ShotRecord &record) {
    std::ostringstream out;
    const auto n = record.n_qubits();
    out << "# bases=" << bases_string(record.bases) << " seed=" << record.seed
        << " shots=" << record.shots << '\n';
    for (std::size_t i = 0; i < record.counts.size(); ++i) {
        if (record.counts[i] == 0) {
            continue;
        }
        for (std::size_t s = 1; s <= n; ++s) {
            out << (bit_of(i, n, s) ? "-1" : "+1") << (s < n ? "," : "");
        }
        out << ' ' << record.counts[i] << '\n';
    }
    return out.str();
}

namespace {

template <typename T> T parse_number(std::string_view text, std::size_t line, const char *what) {
    T value{};
    const auto *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(text) + "'");
    }
    return value;
}

std::string_view field_value(std::string_view header, std::string_view key, std::size_t line) {
    const auto pos = header.find(key);
    if (pos == std::string_view::npos) {
        throw ParseError(line, "missing header field '" + std::string(key) + "'");
    }
    auto rest = header.substr(pos + key.size());
    return rest.substr(0, rest.find(' '));
}

} // namespace

ShotRecord parse_shot_record(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    ShotRecord record;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        if (!have_header) {
            if (!line.starts_with("# ")) {
                throw ParseError(line_no, "expected '# bases=... seed=... shots=...' header");
            }
            std::string_view header = line;
            record.bases = parse_bases(field_value(header, "bases=", line_no));
            record.seed =
                parse_number<std::uint64_t>(field_value(header, "seed=", line_no), line_no, "seed");
            record.shots = parse_number<std::uint64_t>(field_value(header, "shots=", line_no),
                                                       line_no, "shots");
            if (record.bases.empty() || record.bases.size() > kMaxQubits) {
                throw ParseError(line_no, "basis string length out of range");
            }
            record.counts.assign(std::size_t{1} << record.bases.size(), 0);
            have_header = true;
            continue;
        }
        const auto space = line.find(' ');
        if (space == std::string::npos) {
            throw ParseError(line_no, "expected '<tuple> <count>'");
        }
        std::string_view tuple = std::string_view(line).substr(0, space);
        const auto count =
            parse_number<std::uint64_t>(std::string_view(line).substr(space + 1), line_no, "count");
        std::size_t index = 0;
        std::size_t sites = 0;
        while (!tuple.empty()) {
            const auto comma = tuple.find(',');
            const auto item = tuple.substr(0, comma);
            index <<= 1;
            if (item == "-1") {
                index |= 1;
            } else if (item != "+1") {
                throw ParseError(line_no, "outcome must be +1 or -1, got '" + std::string(item) + "'");
            }
            ++sites;
            tuple = comma == std::string_view::npos ? std::string_view{} : tuple.substr(comma + 1);
        }
        if (sites != record.n_qubits()) {
            throw ParseError(line_no, "outcome tuple length does not match bases");
        }
        record.counts[index] += count;
    }
    if (!have_header) {
        throw ParseError(0, "empty shot record");
    }
    std::uint64_t total = 0;
    for (auto c : record.counts) {
        total += c;
    }
    if (total != record.shots) {
        throw ParseError(0, "counts sum to " + std::to_string(total) + " but shots=" +
                                std::to_string(record.shots));
    }
    return record;
}

} // namespace maxent
