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

// Serial reference implementations of the OpenMP kernels. They follow the
// same block and seed decomposition, so their outputs must match the
// parallel versions exactly for any thread count. Kept for tests and the
// benchmark.

#include <cstdint>
#include <span>
#include <vector>

#include "maxent/batch.hpp"
#include "maxent/measurement.hpp"
#include "maxent/search.hpp"

namespace maxent::reference {

ShotRecord sample_outcomes(const StateVector &state, std::span<const PauliAxis> bases,
                           std::uint64_t shots, std::uint64_t seed);

std::vector<SearchOutcome> multi_start(std::size_t n_qubits, std::size_t starts, double tol,
                                       std::uint64_t seed,
                                       std::size_t max_iter = kDefaultMaxIter);

std::vector<Certificates> certify_batch(std::span<const StateVector> states,
                                        double criterion_tol = kDefaultCriterionTol);

std::vector<double> cost_batch(std::span<const StateVector> states);

} // namespace maxent::reference
