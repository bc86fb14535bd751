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

#include "maxent/reference.hpp"

#include <algorithm>

#include "detail/sampling.hpp"
#include "maxent/random.hpp"

namespace maxent::reference {

ShotRecord sample_outcomes(const StateVector &state, std::span<const PauliAxis> bases,
                           std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw DomainError("sample_outcomes: shots must be >= 1");
    }
    const auto distribution = born_distribution(state, bases);
    const auto cdf = detail::cumulative(distribution);
    std::vector<std::uint64_t> counts(distribution.size(), 0);
    const std::uint64_t blocks = detail::block_count(shots, kShotBlock);
    for (std::uint64_t b = 0; b < blocks; ++b) {
        const std::uint64_t n_block = std::min(kShotBlock, shots - b * kShotBlock);
        detail::sample_block(cdf, distribution, n_block, derive_seed(seed, b), counts);
    }
    return {std::vector<PauliAxis>(bases.begin(), bases.end()), shots, std::move(counts), seed};
}

std::vector<SearchOutcome> multi_start(std::size_t n_qubits, std::size_t starts, double tol,
                                       std::uint64_t seed, std::size_t max_iter) {
    if (starts < 1) {
        throw DomainError("multi_start: starts must be >= 1");
    }
    std::vector<SearchOutcome> results;
    results.reserve(starts);
    for (std::size_t k = 0; k < starts; ++k) {
        const std::uint64_t start_seed = derive_seed(seed, k);
        auto outcome = optimize(haar_random_state(n_qubits, start_seed), tol, max_iter);
        outcome.seed = start_seed;
        results.push_back(std::move(outcome));
    }
    std::stable_sort(results.begin(), results.end(),
                     [](const SearchOutcome &a, const SearchOutcome &b) {
                         return a.final_cost < b.final_cost;
                     });
    return results;
}

std::vector<Certificates> certify_batch(std::span<const StateVector> states,
                                        double criterion_tol) {
    std::vector<Certificates> out;
    out.reserve(states.size());
    for (const auto &s : states) {
        out.push_back(certify(s, criterion_tol));
    }
    return out;
}

std::vector<double> cost_batch(std::span<const StateVector> states) {
    std::vector<double> out;
    out.reserve(states.size());
    for (const auto &s : states) {
        out.push_back(cost(s));
    }
    return out;
}

} // namespace maxent::reference
