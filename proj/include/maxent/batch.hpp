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

#include <span>
#include <vector>

#include "maxent/entanglement.hpp"
#include "maxent/states.hpp"

namespace maxent {

/// Per-state certificates for the maximal-entanglement criterion.
struct Certificates {
    CriterionReport criterion;
    std::vector<EntropyReport> entropies;
    std::vector<double> commutator_defects;
    /// max over sites of the entrywise distance of rho_site from I/2.
    double max_density_deviation = 0.0;
};

Certificates certify(const StateVector &state, double criterion_tol = kDefaultCriterionTol);

/// certify() over a corpus, parallel over states with OpenMP. Output order
/// matches input order.
std::vector<Certificates> certify_batch(std::span<const StateVector> states,
                                        double criterion_tol = kDefaultCriterionTol);

/// cost() over a corpus, parallel over states.
std::vector<double> cost_batch(std::span<const StateVector> states);

} // namespace maxent
