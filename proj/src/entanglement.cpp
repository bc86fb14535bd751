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

#include "maxent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "maxent/measurement.hpp"

namespace maxent {

namespace {

double clamp_eigenvalue(double lambda) {
    if (lambda >= 0.0) {
        return lambda;
    }
    if (lambda >= -1e-12) {
        return 0.0;
    }
    throw DomainError("density matrix has eigenvalue " + std::to_string(lambda) +
                      " below -1e-12");
}

} // namespace

ComplexMatrix reduced_density(const StateVector &state, std::size_t site) {
    auto rho = partial_trace_single_site(state.amplitudes(), state.n_qubits(), site);
    if (state.n_qubits() == 2 && site == 1) {
        const auto [l1, l2] = hermitian_eigenvalues_2x2(rho);
        const auto [m1, m2] =
            hermitian_eigenvalues_2x2(coefficient_densities(as_coefficient_matrix(state)).first);
        if (std::abs(l1 - m1) > 1e-12 || std::abs(l2 - m2) > 1e-12) {
            throw Error("reduced_density: partial trace disagrees with A A^dagger");
        }
    }
    return rho;
}

std::pair<ComplexMatrix, ComplexMatrix> coefficient_densities(const CoefficientMatrix &a) {
    const auto m = a.as_matrix();
    return {m * m.adjoint(), m.adjoint() * m};
}

double entropy_nats(std::pair<double, double> eigenvalues) {
    double s = 0.0;
    for (double lambda : {eigenvalues.first, eigenvalues.second}) {
        const double p = clamp_eigenvalue(lambda);
        if (p > 0.0) {
            s -= p * std::log(p);
        }
    }
    return s;
}

EntropyReport reduced_entropy(const StateVector &state, std::size_t site) {
    const auto rho = reduced_density(state, site);
    const auto eig = hermitian_eigenvalues_2x2(rho);
    return {site, eig, entropy_nats(eig)};
}

CriterionReport criterion_check(const StateVector &state, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw DomainError("criterion_check: tolerance must be positive");
    }
    CriterionReport report;
    report.tolerance = tolerance;
    report.expectations.reserve(state.n_qubits());
    for (std::size_t site = 1; site <= state.n_qubits(); ++site) {
        report.expectations.push_back(bloch_vector(state, site));
        for (double e : report.expectations.back()) {
            report.max_abs_expectation = std::max(report.max_abs_expectation, std::abs(e));
        }
    }
    report.satisfied = report.max_abs_expectation <= tolerance;
    return report;
}

ConstraintReport constraint_check(const CoefficientMatrix &a, double tolerance) {
    ConstraintReport report;
    const double m11 = std::abs(a.a11);
    const double m12 = std::abs(a.a12);
    const double m21 = std::abs(a.a21);
    const double m22 = std::abs(a.a22);
    report.modulus_residuals = {m11 * m11 + m12 * m12 - 0.5, m22 - m11, m21 - m12};

    const double phase_sum =
        std::arg(a.a11) + std::arg(a.a22) - std::arg(a.a12) - std::arg(a.a21);
    // remainder() folds into [-pi, pi]; +pi and -pi branches coincide mod 2 pi.
    report.phase_residual =
        std::abs(std::remainder(phase_sum - std::numbers::pi, 2.0 * std::numbers::pi));
    report.degenerate = m11 <= tolerance || m12 <= tolerance;

    const bool moduli_ok = std::all_of(report.modulus_residuals.begin(),
                                       report.modulus_residuals.end(),
                                       [&](double r) { return std::abs(r) <= tolerance; });
    report.satisfied = moduli_ok && (report.degenerate || report.phase_residual <= tolerance);
    return report;
}

std::pair<double, double> schmidt_coefficients(const StateVector &state) {
    const auto [aad, ada] = coefficient_densities(as_coefficient_matrix(state));
    const auto [l1, l2] = hermitian_eigenvalues_2x2(aad);
    return {std::sqrt(clamp_eigenvalue(l1)), std::sqrt(clamp_eigenvalue(l2))};
}

double commutator_defect(const StateVector &state, std::size_t site) {
    const auto rho = reduced_density(state, site);
    double worst = 0.0;
    for (auto axis : kAllAxes) {
        worst = std::max(worst, frobenius_norm(commutator(pauli(axis), rho)));
    }
    return worst;
}

StateVector apply_local_unitaries(const StateVector &state, std::span<const ComplexMatrix> u) {
    const auto n = state.n_qubits();
    if (u.size() != n) {
        throw SizeError("apply_local_unitaries: need " + std::to_string(n) + " factors, got " +
                        std::to_string(u.size()));
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (u[k].rows() != 2 || u[k].cols() != 2 || !is_unitary(u[k], 1e-10)) {
            throw DomainError("apply_local_unitaries: factor " + std::to_string(k + 1) +
                              " is not a 2x2 unitary");
        }
    }
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t site = 1; site <= n; ++site) {
        amps = apply_single_site(amps, n, site, u[site - 1]);
    }
    return from_amplitudes(amps);
}

double trace_invariant(const StateVector &state) {
    return trace_invariant(as_coefficient_matrix(state));
}

double trace_invariant(const CoefficientMatrix &a) {
    const auto m = a.as_matrix();
    return (m * m.adjoint()).trace().real();
}

} // namespace maxent
