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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxent/tensor.hpp"

namespace maxent {

/// Normalized pure state of an n-qubit register.
///
/// Basis order is lexicographic over {+, -} with + < - and the first qubit
/// most significant, so index(label) = sum_k bit_k * 2^(n-k) with bit(+) = 0
/// and bit(-) = 1. For two qubits the amplitudes are a11, a12, a21, a22 in
/// that order.
class StateVector {
  public:
    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

  private:
    friend StateVector from_amplitudes(std::span<const Complex> raw);
    StateVector(std::size_t n, std::vector<Complex> amps)
        : n_qubits_(n), amplitudes_(std::move(amps)) {}

    std::size_t n_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// The 2x2 reshape A = ||a_ij|| of a two-qubit state. Plain data: helpers
/// that need normalization check it themselves.
struct CoefficientMatrix {
    Complex a11, a12, a21, a22;

    ComplexMatrix as_matrix() const { return {{a11, a12}, {a21, a22}}; }
};

enum class EprKind { psi, varphi };
enum class Sign { plus, minus };
enum class NamedExample { two_qubit_psi, two_qubit_psi_prime, three_qubit_nontrivial };

/// Rescales `raw` to unit norm. Vectors already normalized to machine
/// precision (|norm^2 - 1| <= 4 eps) are kept bit-for-bit.
/// Throws SizeError unless the length is 2^n with 1 <= n <= 8, DomainError on
/// non-finite entries or norm <= 1e-12.
StateVector from_amplitudes(std::span<const Complex> raw);

/// psi:    (|+-> + e^{i phase}|-+>)/sqrt2
/// varphi: (|++> + e^{i phase}|-->)/sqrt2
StateVector epr_family(EprKind kind, double phase);

/// b1|++> + b2|-->. Requires b1, b2 >= 0 and b1^2 + b2^2 = 1 within 1e-9.
StateVector schmidt_state(double b1, double b2);

/// (|+++> +- |--->)/sqrt2
StateVector ghz(Sign sign);

StateVector named_example(NamedExample which);
/// Accepts "two_qubit_psi", "two_qubit_psi_prime", "three_qubit_nontrivial".
NamedExample parse_named_example(std::string_view name);
std::string_view to_string(NamedExample which);

CoefficientMatrix as_coefficient_matrix(const StateVector &state);
std::vector<Complex> flatten(const CoefficientMatrix &a);

/// <a|b>
Complex inner_product(const StateVector &a, const StateVector &b);

/// Basis index of a label such as "+-+". Accepts '+' and '-' only.
std::size_t basis_index(std::string_view label);
std::string basis_label(std::size_t index, std::size_t n_qubits);

} // namespace maxent
