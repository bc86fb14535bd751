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
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "maxent/error.hpp"

namespace maxent {

using Complex = std::complex<double>;

/// Largest supported register. Matrices built by tensor_product may not
/// exceed kMaxDim x kMaxDim.
inline constexpr std::size_t kMaxQubits = 8;
inline constexpr std::size_t kMaxDim = std::size_t{1} << kMaxQubits;

/// Dense row-major complex matrix. Column vectors are rows x 1.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Builds from nested rows, e.g. ComplexMatrix{{1, 0}, {0, 1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix column(std::span<const Complex> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    std::span<const Complex> entries() const noexcept { return entries_; }
    std::span<Complex> entries() noexcept { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix &m);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Kronecker product; the first factor indexes the most significant block.
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// Reduced density matrix of one qubit (1-based `site`) of an n-qubit pure
/// state, from the definitional sum
///   rho[a][b] = sum_rest psi[a, rest] * conj(psi[b, rest]).
/// Requires a normalized state (within 1e-9).
ComplexMatrix partial_trace_single_site(std::span<const Complex> amplitudes, std::size_t n_qubits,
                                        std::size_t site);

/// Closed-form spectrum of a 2x2 Hermitian matrix, descending.
std::pair<double, double> hermitian_eigenvalues_2x2(const ComplexMatrix &m);

double frobenius_norm(const ComplexMatrix &m);

/// a*b - b*a
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

bool is_hermitian(const ComplexMatrix &m, double tol);
bool is_unitary(const ComplexMatrix &m, double tol);

} // namespace maxent
