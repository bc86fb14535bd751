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

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "maxent/random.hpp"

namespace maxent::detail {

/// Cumulative sums of a distribution; the sampler's lookup table.
inline std::vector<double> cumulative(std::span<const double> distribution) {
    std::vector<double> cdf(distribution.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < distribution.size(); ++i) {
        acc += distribution[i];
        cdf[i] = acc;
    }
    return cdf;
}

/// Draws `shots` outcomes for one block into `counts`.
inline void sample_block(std::span<const double> cdf, std::span<const double> distribution,
                         std::uint64_t shots, std::uint64_t block_seed,
                         std::span<std::uint64_t> counts) {
    Rng rng(block_seed);
    const double total = cdf.back();
    std::size_t last_nonzero = distribution.size() - 1;
    while (last_nonzero > 0 && distribution[last_nonzero] <= 0.0) {
        --last_nonzero;
    }
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t k = it == cdf.end() ? last_nonzero
                                        : static_cast<std::size_t>(it - cdf.begin());
        ++counts[k];
    }
}

inline std::uint64_t block_count(std::uint64_t shots, std::uint64_t block) {
    return (shots + block - 1) / block;
}

} // namespace maxent::detail
