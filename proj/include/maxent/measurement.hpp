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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxent/states.hpp"
#include "maxent/tensor.hpp"

namespace maxent {

/// Local Pauli observable. Values match the conventional axis numbering.
enum class PauliAxis : int { x = 1, y = 2, z = 3 };

inline constexpr std::array<PauliAxis, 3> kAllAxes{PauliAxis::x, PauliAxis::y, PauliAxis::z};

/// sigma_1 = [[0,1],[1,0]], sigma_2 = [[0,-i],[i,0]], sigma_3 = [[1,0],[0,-1]]
/// in the |+>, |-> basis.
ComplexMatrix pauli(PauliAxis axis);

char axis_char(PauliAxis axis);
/// Parses a basis string over {x, y, z}, one character per site.
std::vector<PauliAxis> parse_bases(std::string_view text);
std::string bases_string(std::span<const PauliAxis> bases);

/// Applies a 2x2 operator to one (1-based) site of an n-qubit amplitude vector.
std::vector<Complex> apply_single_site(std::span<const Complex> amplitudes, std::size_t n_qubits,
                                       std::size_t site, const ComplexMatrix &op);

/// <psi| I x .. x sigma_axis x .. x I |psi>, evaluated on the state vector.
double local_expectation(const StateVector &state, std::size_t site, PauliAxis axis);

/// The local Pauli expectations (Bloch vector) of one site.
std::array<double, 3> bloch_vector(const StateVector &state, std::size_t site);

/// <sigma^2> - <sigma>^2 = 1 - <sigma>^2.
double local_variance(const StateVector &state, std::size_t site, PauliAxis axis);

/// Connected correlator <s_a s_b> - <s_a><s_b> between two distinct sites.
double correlation(const StateVector &state, std::size_t site_a, PauliAxis axis_a,
                   std::size_t site_b, PauliAxis axis_b);

struct CorrelationMatrix {
    /// t[l][m] pairs axis l+1 at site_a with axis m+1 at site_b.
    std::array<std::array<double, 3>, 3> t{};
    std::pair<std::size_t, std::size_t> site_pair{};
};

CorrelationMatrix correlation_matrix(const StateVector &state, std::size_t site_a,
                                     std::size_t site_b);

/// Sampled joint outcomes of local Pauli measurements.
///
/// counts is dense over the 2^n outcome tuples. Index bits follow the state
/// basis order (first site most significant); bit 0 is outcome +1, bit 1 is
/// -1, so ascending index is lexicographic with +1 < -1.
struct ShotRecord {
    std::vector<PauliAxis> bases;
    std::uint64_t shots = 0;
    std::vector<std::uint64_t> counts;
    std::uint64_t seed = 0;

    std::size_t n_qubits() const noexcept { return bases.size(); }
};

/// Exact outcome distribution for measuring `bases` on `state`, indexed as in
/// ShotRecord::counts.
std::vector<double> born_distribution(const StateVector &state, std::span<const PauliAxis> bases);

/// Shots drawn per independently seeded block. Part of the reproducibility
/// contract: block b uses Rng(derive_seed(seed, b)).
inline constexpr std::uint64_t kShotBlock = 1U << 16;

/// I.i.d. draws from the Born distribution. Blocks are sampled in parallel
/// with OpenMP; the result does not depend on the thread count.
ShotRecord sample_outcomes(const StateVector &state, std::span<const PauliAxis> bases,
                           std::uint64_t shots, std::uint64_t seed);

/// Plug-in Shannon mutual information (nats) between the outcomes of two
/// distinct sites. 0 ln 0 = 0.
double mutual_information(const ShotRecord &record, std::size_t site_a, std::size_t site_b);

/// Same quantity computed from an exact distribution over 2^n outcomes.
double mutual_information(std::span<const double> distribution, std::size_t n_qubits,
                          std::size_t site_a, std::size_t site_b);

/// Empirical mean of the product of +-1 outcomes over `sites`.
double empirical_mean(const ShotRecord &record, std::span<const std::size_t> sites);

/// Text table: a header line `# bases=<xyz..> seed=<s> shots=<N>` then one
/// `<tuple> <count>` row per observed outcome, tuples like `+1,-1`, ascending.
std::string format_shot_record(const ShotRecord &record);
ShotRecord parse_shot_record(std::string_view text);

} // namespace maxent
