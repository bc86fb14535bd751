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

#include <cstdint>
#include <string>
#include <vector>

#include "maxent/entanglement.hpp"
#include "maxent/random.hpp"
#include "maxent/states.hpp"

namespace maxent {

struct VerifyOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    double criterion_tol = kDefaultCriterionTol;
    double constraint_tol = kDefaultConstraintTol;
    /// When positive, states that are supposed to satisfy the criterion are
    /// displaced by a random vector of this norm before checking (fault
    /// injection).
    double perturb = 0.0;
};

struct PropertyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t passed = 0;

    bool ok() const noexcept { return checked > 0 && passed == checked; }
};

struct VerifyReport {
    std::vector<PropertyResult> properties;

    bool all_passed() const noexcept;
};

/// Cross-module property suite, run on `trials` generated and random states:
///   constructive   generated constrained states satisfy the criterion, have
///                  maximal entropies, I/2 marginals and pass constraint_check
///   completeness   two-qubit optimizer endpoints pass constraint_check
///   consistency    criterion, constraint, entropy and marginal verdicts agree
///                  on random and near-maximal states
///   lu-invariance  entropies, Schmidt coefficients, verdict and Tr(AA^dag)
///                  survive random local SU(2) rotations
///   commutator     Pauli operators commute with the marginals of criterion
///                  states (2 and 3 qubits)
///   coupling       ln 2 - S >= |bloch|^2 / 2 on random states
///   correlation    T T^T = I for criterion states
/// Each trial uses its own stream derive_seed(seed, trial).
VerifyReport run_verification(const VerifyOptions &options);

/// Displaces `state` by a random vector of norm `epsilon` and renormalizes.
StateVector perturb_state(const StateVector &state, double epsilon, Rng &rng);

} // namespace maxent
