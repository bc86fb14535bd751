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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "maxent/measurement.hpp"
#include "maxent/random.hpp"
#include "oracles.hpp"

using namespace maxent;

namespace {

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng &rng) {
    ComplexMatrix m(rows, cols);
    for (auto &e : m.entries()) {
        const double re = rng.normal();
        const double im = rng.normal();
        e = {re, im};
    }
    return m;
}

} // namespace

TEST(TensorProduct, identity_times_identity) {
    EXPECT_EQ(max_abs_diff(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                           ComplexMatrix::identity(4)),
              0.0);
}

TEST(TensorProduct, sigma_z_squared_is_diagonal) {
    // Hand expansion: diag(1,-1) (x) diag(1,-1) = diag(1,-1,-1,1).
    const auto zz = tensor_product(pauli(PauliAxis::z), pauli(PauliAxis::z));
    const ComplexMatrix expected{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}};
    EXPECT_EQ(max_abs_diff(zz, expected), 0.0);
}

TEST(TensorProduct, column_kets_follow_basis_order) {
    const std::vector<Complex> plus{1.0, 0.0}, minus{0.0, 1.0};
    const auto ket = tensor_product(ComplexMatrix::column(plus), ComplexMatrix::column(minus));
    ASSERT_EQ(ket.rows(), 4u);
    ASSERT_EQ(ket.cols(), 1u);
    // |+-> is index 1.
    EXPECT_EQ(ket(0, 0), Complex(0.0));
    EXPECT_EQ(ket(1, 0), Complex(1.0));
    EXPECT_EQ(ket(2, 0), Complex(0.0));
    EXPECT_EQ(ket(3, 0), Complex(0.0));
}

TEST(TensorProduct, rejects_oversize_and_empty) {
    const auto big = ComplexMatrix::identity(256);
    EXPECT_THROW(tensor_product(big, ComplexMatrix::identity(2)), SizeError);
    EXPECT_THROW(tensor_product(ComplexMatrix{}, ComplexMatrix::identity(2)), SizeError);
    EXPECT_NO_THROW(tensor_product(ComplexMatrix::identity(128), ComplexMatrix::identity(2)));
}

TEST(TensorProduct, bilinear_and_associative) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_matrix(2, 3, rng);
        const auto a2 = random_matrix(2, 3, rng);
        const auto b = random_matrix(3, 2, rng);
        const auto c = random_matrix(2, 2, rng);
        const Complex s{rng.normal(), rng.normal()};
        EXPECT_LE(max_abs_diff(tensor_product(a + s * a2, b),
                               tensor_product(a, b) + s * tensor_product(a2, b)),
                  1e-12);
        EXPECT_LE(max_abs_diff(tensor_product(b, a + a2), tensor_product(b, a) + tensor_product(b, a2)),
                  1e-12);
        EXPECT_LE(max_abs_diff(tensor_product(tensor_product(a, b), c),
                               tensor_product(a, tensor_product(b, c))),
                  1e-12);
    }
}

TEST(PartialTrace, product_state_gives_projector) {
    const std::vector<Complex> pp{1.0, 0.0, 0.0, 0.0};
    const auto rho = partial_trace_single_site(pp, 2, 1);
    EXPECT_EQ(max_abs_diff(rho, ComplexMatrix{{1, 0}, {0, 0}}), 0.0);
}

TEST(PartialTrace, bell_state_both_sites) {
    const double h = 1.0 / std::numbers::sqrt2;
    const std::vector<Complex> bell{h, 0.0, 0.0, h};
    // Four-term definitional sum: rho[a][b] = sum_k psi[a,k] conj(psi[b,k]).
    const ComplexMatrix half{{0.5, 0}, {0, 0.5}};
    EXPECT_LE(max_abs_diff(partial_trace_single_site(bell, 2, 1), half), 1e-15);
    EXPECT_LE(max_abs_diff(partial_trace_single_site(bell, 2, 2), half), 1e-15);
}

TEST(PartialTrace, errors) {
    const std::vector<Complex> pp{1.0, 0.0, 0.0, 0.0};
    EXPECT_THROW(partial_trace_single_site(pp, 2, 0), DomainError);
    EXPECT_THROW(partial_trace_single_site(pp, 2, 3), DomainError);
    const std::vector<Complex> unnormalized{1.0, 1.0, 0.0, 0.0};
    EXPECT_THROW(partial_trace_single_site(unnormalized, 2, 1), DomainError);
    EXPECT_THROW(partial_trace_single_site(pp, 3, 1), SizeError);
}

TEST(PartialTrace, hermitian_unit_trace_and_matches_oracle) {
    Rng rng(5);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Complex> psi(std::size_t{1} << n);
            double norm2 = 0.0;
            for (auto &a : psi) {
                const double re = rng.normal();
                const double im = rng.normal();
                a = {re, im};
                norm2 += std::norm(a);
            }
            for (auto &a : psi) {
                a /= std::sqrt(norm2);
            }
            for (std::size_t site = 1; site <= n; ++site) {
                const auto rho = partial_trace_single_site(psi, n, site);
                EXPECT_TRUE(is_hermitian(rho, 1e-12));
                EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
                EXPECT_NEAR(rho.trace().imag(), 0.0, 1e-12);
                const auto ref = oracle::reduced_density(psi, n, site);
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        EXPECT_LE(std::abs(rho(a, b) - ref[a][b]), 1e-12);
                    }
                }
            }
        }
    }
}

TEST(PartialTrace, product_of_factors_returns_kept_projector) {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::array<Complex, 2> u{Complex{rng.normal(), rng.normal()}, Complex{rng.normal(), rng.normal()}};
        std::array<Complex, 2> v{Complex{rng.normal(), rng.normal()}, Complex{rng.normal(), rng.normal()}};
        const double nu = std::sqrt(std::norm(u[0]) + std::norm(u[1]));
        const double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
        for (auto &x : u) x /= nu;
        for (auto &x : v) x /= nv;
        const auto psi = tensor_product(ComplexMatrix::column(u), ComplexMatrix::column(v));
        const auto pu = ComplexMatrix::column(u) * ComplexMatrix::column(u).adjoint();
        const auto pv = ComplexMatrix::column(v) * ComplexMatrix::column(v).adjoint();
        EXPECT_LE(max_abs_diff(partial_trace_single_site(psi.entries(), 2, 1), pu), 1e-12);
        EXPECT_LE(max_abs_diff(partial_trace_single_site(psi.entries(), 2, 2), pv), 1e-12);
    }
}

TEST(HermitianEigenvalues, closed_form_cases) {
    auto [a1, a2] = hermitian_eigenvalues_2x2(ComplexMatrix{{0.5, 0}, {0, 0.5}});
    EXPECT_DOUBLE_EQ(a1, 0.5);
    EXPECT_DOUBLE_EQ(a2, 0.5);
    auto [b1, b2] = hermitian_eigenvalues_2x2(ComplexMatrix{{1, 0}, {0, 0}});
    EXPECT_DOUBLE_EQ(b1, 1.0);
    EXPECT_DOUBLE_EQ(b2, 0.0);
    // det(M - x) = (1/2 - x)^2 - 1/16 -> x = 1/2 +- 1/4.
    auto [c1, c2] = hermitian_eigenvalues_2x2(ComplexMatrix{{0.5, 0.25}, {0.25, 0.5}});
    EXPECT_NEAR(c1, 0.75, 1e-15);
    EXPECT_NEAR(c2, 0.25, 1e-15);
}

TEST(HermitianEigenvalues, rejects_non_hermitian) {
    EXPECT_THROW(hermitian_eigenvalues_2x2(ComplexMatrix{{1, 1}, {0, 1}}), DomainError);
    EXPECT_THROW(hermitian_eigenvalues_2x2(ComplexMatrix::identity(3)), SizeError);
}

TEST(HermitianEigenvalues, trace_and_determinant_identities) {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = rng.normal(), d = rng.normal();
        const Complex b{rng.normal(), rng.normal()};
        const ComplexMatrix m{{a, b}, {std::conj(b), d}};
        const auto [l1, l2] = hermitian_eigenvalues_2x2(m);
        EXPECT_GE(l1, l2);
        EXPECT_NEAR(l1 + l2, a + d, 1e-12);
        EXPECT_NEAR(l1 * l2, a * d - std::norm(b), 1e-12 * std::max(1.0, std::abs(a * d)));
    }
}

TEST(FrobeniusNorm, values) {
    EXPECT_EQ(frobenius_norm(ComplexMatrix(2, 2)), 0.0);
    EXPECT_DOUBLE_EQ(frobenius_norm(ComplexMatrix::identity(2)), std::sqrt(2.0));
    // |-i|^2 + |i|^2 = 2.
    EXPECT_DOUBLE_EQ(frobenius_norm(pauli(PauliAxis::y)), std::sqrt(2.0));
}
