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

#include "maxent/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace maxent {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw SizeError("ComplexMatrix: entry count " + std::to_string(entries_.size()) +
                        " does not match " + std::to_string(rows_) + "x" +
                        std::to_string(cols_));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw SizeError("ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
    return ComplexMatrix(values.size(), 1, std::vector<Complex>(values.begin(), values.end()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols_ != b.rows_) {
        throw SizeError("matrix product: inner dimensions differ");
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw SizeError(std::string(op) + ": shapes differ");
    }
}

} // namespace

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "matrix sum");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) {
        out.entries_[i] += b.entries_[i];
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "matrix difference");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) {
        out.entries_[i] -= b.entries_[i];
    }
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &m) {
    ComplexMatrix out = m;
    for (auto &e : out.entries_) {
        e *= s;
    }
    return out;
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.empty() || b.empty()) {
        throw SizeError("tensor_product: empty operand");
    }
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > kMaxDim || cols > kMaxDim) {
        throw SizeError("tensor_product: result " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " exceeds " + std::to_string(kMaxDim) + "x" +
                        std::to_string(kMaxDim));
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace_single_site(std::span<const Complex> amplitudes, std::size_t n_qubits,
                                        std::size_t site) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw SizeError("partial_trace_single_site: unsupported qubit count " +
                        std::to_string(n_qubits));
    }
    if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
        throw SizeError("partial_trace_single_site: amplitude count does not match 2^n");
    }
    if (site < 1 || site > n_qubits) {
        throw DomainError("partial_trace_single_site: site " + std::to_string(site) +
                          " out of range 1.." + std::to_string(n_qubits));
    }
    double norm2 = 0.0;
    for (const auto &a : amplitudes) {
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > 1e-9) {
        throw DomainError("partial_trace_single_site: state is not normalized");
    }

    // Kept bit sits at position (n - site) counted from the least significant end.
    const std::size_t shift = n_qubits - site;
    const std::size_t low_mask = (std::size_t{1} << shift) - 1;
    const std::size_t rest_count = amplitudes.size() / 2;
    ComplexMatrix rho(2, 2);
    for (std::size_t rest = 0; rest < rest_count; ++rest) {
        const std::size_t base = ((rest & ~low_mask) << 1) | (rest & low_mask);
        const std::size_t idx[2] = {base, base | (std::size_t{1} << shift)};
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                rho(a, b) += amplitudes[idx[a]] * std::conj(amplitudes[idx[b]]);
            }
        }
    }
    return rho;
}

std::pair<double, double> hermitian_eigenvalues_2x2(const ComplexMatrix &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw SizeError("hermitian_eigenvalues_2x2: matrix is not 2x2");
    }
    if (!is_hermitian(m, 1e-10)) {
        throw DomainError("hermitian_eigenvalues_2x2: matrix is not Hermitian");
    }
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double tr = a + d;
    // tr^2 - 4 det rewritten as (a - d)^2 + 4|b|^2, which cannot go negative.
    const double disc = (a - d) * (a - d) + 4.0 * std::norm(m(0, 1));
    const double root = std::sqrt(disc);
    return {(tr + root) / 2.0, (tr - root) / 2.0};
}

double frobenius_norm(const ComplexMatrix &m) {
    double sum = 0.0;
    for (const auto &e : m.entries()) {
        sum += std::norm(e);
    }
    return std::sqrt(sum);
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a * b - b * a;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return max_abs_diff(m * m.adjoint(), ComplexMatrix::identity(m.rows())) <= tol;
}

} // namespace maxent
