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

#include "maxent/batch.hpp"

#include <algorithm>
#include <cstdint>

#include "maxent/search.hpp"

namespace maxent {

Certificates certify(const StateVector &state, double criterion_tol) {
    Certificates c;
    c.criterion = criterion_check(state, criterion_tol);
    const ComplexMatrix half_identity = Complex{0.5} * ComplexMatrix::identity(2);
    for (std::size_t site = 1; site <= state.n_qubits(); ++site) {
        const auto rho = reduced_density(state, site);
        const auto eig = hermitian_eigenvalues_2x2(rho);
        c.entropies.push_back({site, eig, entropy_nats(eig)});
        c.commutator_defects.push_back(commutator_defect(state, site));
        c.max_density_deviation = std::max(c.max_density_deviation, max_abs_diff(rho, half_identity));
    }
    return c;
}

std::vector<Certificates> certify_batch(std::span<const StateVector> states,
                                        double criterion_tol) {
    std::vector<Certificates> out(states.size());
    const auto count = static_cast<std::int64_t>(states.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = certify(states[static_cast<std::size_t>(i)], criterion_tol);
    }
    return out;
}

std::vector<double> cost_batch(std::span<const StateVector> states) {
    std::vector<double> out(states.size());
    const auto count = static_cast<std::int64_t>(states.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = cost(states[static_cast<std::size_t>(i)]);
    }
    return out;
}

} // namespace maxent
