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

#include "maxent/states.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

namespace maxent {

StateVector from_amplitudes(std::span<const Complex> raw) {
    const std::size_t len = raw.size();
    if (len < 2 || (len & (len - 1)) != 0) {
        throw SizeError("from_amplitudes: length " + std::to_string(len) +
                        " is not a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(len));
    if (n > kMaxQubits) {
        throw SizeError("from_amplitudes: " + std::to_string(n) + " qubits exceeds limit of " +
                        std::to_string(kMaxQubits));
    }
    double norm2 = 0.0;
    for (const auto &a : raw) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("from_amplitudes: non-finite amplitude");
        }
        norm2 += std::norm(a);
    }
    const double norm = std::sqrt(norm2);
    if (!(norm > 1e-12)) {
        throw DomainError("from_amplitudes: zero vector cannot be normalized");
    }
    std::vector<Complex> amps(raw.begin(), raw.end());
    if (std::abs(norm2 - 1.0) > 4.0 * std::numeric_limits<double>::epsilon()) {
        for (auto &a : amps) {
            a /= norm;
        }
    }
    return StateVector(n, std::move(amps));
}

StateVector epr_family(EprKind kind, double phase) {
    const double h = 1.0 / std::numbers::sqrt2;
    const Complex rotated = std::polar(h, phase);
    std::vector<Complex> amps(4, 0.0);
    if (kind == EprKind::psi) {
        amps[1] = h;
        amps[2] = rotated;
    } else {
        amps[0] = h;
        amps[3] = rotated;
    }
    return from_amplitudes(amps);
}

StateVector schmidt_state(double b1, double b2) {
    if (!(b1 >= 0.0) || !(b2 >= 0.0)) {
        throw DomainError("schmidt_state: coefficients must be nonnegative");
    }
    if (std::abs(b1 * b1 + b2 * b2 - 1.0) > 1e-9) {
        throw DomainError("schmidt_state: b1^2 + b2^2 must equal 1");
    }
    const std::vector<Complex> amps{b1, 0.0, 0.0, b2};
    return from_amplitudes(amps);
}

StateVector ghz(Sign sign) {
    const double h = 1.0 / std::numbers::sqrt2;
    std::vector<Complex> amps(8, 0.0);
    amps[0] = h;
    amps[7] = sign == Sign::plus ? h : -h;
    return from_amplitudes(amps);
}

StateVector named_example(NamedExample which) {
    constexpr Complex i{0.0, 1.0};
    switch (which) {
    case NamedExample::two_qubit_psi: {
        const std::vector<Complex> amps{0.5 * i, 0.5, 0.5, 0.5 * i};
        return from_amplitudes(amps);
    }
    case NamedExample::two_qubit_psi_prime: {
        const std::vector<Complex> amps{0.5, 0.5 * i, 0.5 * i, 0.5};
        return from_amplitudes(amps);
    }
    case NamedExample::three_qubit_nontrivial: {
        const double s = 1.0 / std::sqrt(8.0);
        // +++, ++-, +-+, +--, -++, -+-, --+, ---
        const std::vector<Complex> amps{s, -i * s, s, i * s, i * s, s, -i * s, s};
        return from_amplitudes(amps);
    }
    }
    throw DomainError("named_example: unknown example");
}

NamedExample parse_named_example(std::string_view name) {
    for (auto e : {NamedExample::two_qubit_psi, NamedExample::two_qubit_psi_prime,
                   NamedExample::three_qubit_nontrivial}) {
        if (to_string(e) == name) {
            return e;
        }
    }
    throw DomainError("unknown example name '" + std::string(name) + "'");
}

std::string_view to_string(NamedExample which) {
    switch (which) {
    case NamedExample::two_qubit_psi:
        return "two_qubit_psi";
    case NamedExample::two_qubit_psi_prime:
        return "two_qubit_psi_prime";
    case NamedExample::three_qubit_nontrivial:
        return "three_qubit_nontrivial";
    }
    return "?";
}

CoefficientMatrix as_coefficient_matrix(const StateVector &state) {
    if (state.n_qubits() != 2) {
        throw SizeError("as_coefficient_matrix: state has " + std::to_string(state.n_qubits()) +
                        " qubits, expected 2");
    }
    return {state[0], state[1], state[2], state[3]};
}

std::vector<Complex> flatten(const CoefficientMatrix &a) { return {a.a11, a.a12, a.a21, a.a22}; }

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw SizeError("inner_product: dimensions differ");
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

std::size_t basis_index(std::string_view label) {
    if (label.empty() || label.size() > kMaxQubits) {
        throw SizeError("basis_index: label length out of range");
    }
    std::size_t index = 0;
    for (char c : label) {
        index <<= 1;
        if (c == '-') {
            index |= 1;
        } else if (c != '+') {
            throw DomainError(std::string("basis_index: invalid symbol '") + c + "'");
        }
    }
    return index;
}

std::string basis_label(std::size_t index, std::size_t n_qubits) {
    std::string label(n_qubits, '+');
    for (std::size_t k = 0; k < n_qubits; ++k) {
        if ((index >> (n_qubits - 1 - k)) & 1U) {
            label[k] = '-';
        }
    }
    return label;
}

} // namespace maxent
