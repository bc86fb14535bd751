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
#include <functional>
#include <span>
#include <vector>

#include "maxent/random.hpp"
#include "maxent/states.hpp"
#include "maxent/tensor.hpp"

namespace maxent {

/// Which representative of the +-pi phase condition to use. Both describe the
/// same set of states; they differ only by 2 pi.
enum class Branch { plus_pi, minus_pi };

/// Free parameters of a two-qubit state with vanishing local expectations:
///   a11 = r e^{i alpha},  a12 = s e^{i beta},  a21 = s e^{i delta},
///   a22 = r e^{i gamma},  s = sqrt(1/2 - r^2),
///   gamma = branch + beta + delta - alpha.
struct ConstraintParams {
    double r = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    Branch branch = Branch::plus_pi;
};

/// Throws DomainError when r lies outside [0, 1/sqrt2] by more than 1e-12.
StateVector generate_constrained(const ConstraintParams &params);

/// r^2 uniform on [0, 1/2], phases uniform on [0, 2 pi), branch +pi.
ConstraintParams random_constraint_params(Rng &rng);

/// Normalized vector of i.i.d. standard complex Gaussians (Haar on the sphere).
StateVector haar_random_state(std::size_t n_qubits, std::uint64_t seed);
StateVector haar_random_state(std::size_t n_qubits, Rng &rng);

/// Haar-distributed SU(2) element [[a, -conj b], [b, conj a]].
ComplexMatrix haar_random_su2(std::uint64_t seed);
ComplexMatrix haar_random_su2(Rng &rng);

/// Sum over sites and axes of the squared local Pauli expectations.
double cost(const StateVector &state);

/// The same quadratic-form expression evaluated on a raw (not necessarily
/// normalized) amplitude vector.
double raw_cost(std::span<const Complex> amplitudes, std::size_t n_qubits);

/// Euclidean gradient of raw_cost with respect to the real and imaginary
/// parts of each amplitude, packed as g_k = d/dRe psi_k + i d/dIm psi_k.
std::vector<Complex> cost_gradient(std::span<const Complex> amplitudes, std::size_t n_qubits);

struct SearchOutcome {
    StateVector state;
    double final_cost = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultMaxIter = 100000;

/// Called with (iteration, cost) after every accepted iterate.
using IterationObserver = std::function<void(std::size_t, double)>;

/// Riemannian descent of cost() on the unit sphere. Each step projects the
/// gradient onto the tangent space, backtracks from step 0.5 by halving until
/// an Armijo decrease, and renormalizes. At a critical point with positive
/// cost, small deterministic perturbations are tried and accepted only on
/// strict decrease. Stops on cost <= tol, step < 1e-14 with no escape, or
/// max_iter; exhausting max_iter is reported through converged = false.
SearchOutcome optimize(const StateVector &initial, double tol,
                       std::size_t max_iter = kDefaultMaxIter,
                       const IterationObserver &observer = {});

/// Independent optimize() runs from haar_random_state(n, derive_seed(seed, k)).
/// Starts run in parallel under OpenMP; results are sorted by final_cost and
/// do not depend on the schedule.
std::vector<SearchOutcome> multi_start(std::size_t n_qubits, std::size_t starts, double tol,
                                       std::uint64_t seed,
                                       std::size_t max_iter = kDefaultMaxIter);

} // namespace maxent
