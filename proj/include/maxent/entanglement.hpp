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
#include <span>
#include <utility>
#include <vector>

#include "maxent/states.hpp"
#include "maxent/tensor.hpp"

namespace maxent {

inline constexpr double kDefaultCriterionTol = 1e-9;
inline constexpr double kDefaultConstraintTol = 1e-6;

/// Single-site reduced density matrix from the definitional partial trace.
/// For two qubits, site 1 is additionally cross-checked against A A^dagger.
ComplexMatrix reduced_density(const StateVector &state, std::size_t site);

/// The coefficient-matrix shorthands rho1 = A A^dagger and A^dagger A.
/// A^dagger A is the transpose of the definitional site-2 reduction; both
/// share a spectrum.
std::pair<ComplexMatrix, ComplexMatrix> coefficient_densities(const CoefficientMatrix &a);

struct EntropyReport {
    std::size_t site = 0;
    std::pair<double, double> eigenvalues{};
    double entropy_nats = 0.0;
};

/// -sum p ln p over a 2x2 density spectrum. Eigenvalues in [-1e-12, 0) are
/// clamped to 0; anything more negative throws DomainError.
double entropy_nats(std::pair<double, double> eigenvalues);

EntropyReport reduced_entropy(const StateVector &state, std::size_t site);

struct CriterionReport {
    /// expectations[site - 1][axis - 1]
    std::vector<std::array<double, 3>> expectations;
    double max_abs_expectation = 0.0;
    bool satisfied = false;
    double tolerance = 0.0;
};

/// Evaluates all 3n local Pauli expectations; satisfied iff every one is
/// within `tolerance` of zero.
CriterionReport criterion_check(const StateVector &state, double tolerance = kDefaultCriterionTol);

struct ConstraintReport {
    /// |a11|^2 + |a12|^2 - 1/2, |a22| - |a11|, |a21| - |a12|
    std::array<double, 3> modulus_residuals{};
    /// Distance of arg a11 + arg a22 - arg a12 - arg a21 from pi, mod 2 pi.
    double phase_residual = 0.0;
    bool satisfied = false;
    /// |a11| or |a12| within tolerance of zero: the phase condition is vacuous.
    bool degenerate = false;
};

ConstraintReport constraint_check(const CoefficientMatrix &a,
                                  double tolerance = kDefaultConstraintTol);

/// Descending singular values of A. Squares sum to 1 for normalized input.
std::pair<double, double> schmidt_coefficients(const StateVector &state);

/// max over l of || [sigma_l, rho_site] ||_F.
double commutator_defect(const StateVector &state, std::size_t site);

/// Applies u[k] to site k+1. Each factor must be a 2x2 unitary within 1e-10.
StateVector apply_local_unitaries(const StateVector &state, std::span<const ComplexMatrix> u);

/// Tr(A A^dagger). Equals 1 for any normalized two-qubit state.
double trace_invariant(const StateVector &state);
double trace_invariant(const CoefficientMatrix &a);

} // namespace maxent
