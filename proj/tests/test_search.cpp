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

#include "maxent/search.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "maxent/entanglement.hpp"
#include "maxent/measurement.hpp"
#include "oracles.hpp"

using namespace maxent;

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kH = 1.0 / std::numbers::sqrt2;
const Complex kI{0.0, 1.0};

double oracle_cost(const StateVector &s) {
    const std::vector<Complex> psi(s.amplitudes().begin(), s.amplitudes().end());
    double c = 0.0;
    for (std::size_t site = 1; site <= s.n_qubits(); ++site) {
        for (int axis = 1; axis <= 3; ++axis) {
            const double e = oracle::local_expectation(psi, s.n_qubits(), site, axis);
            c += e * e;
        }
    }
    return c;
}

} // namespace

TEST(GenerateConstrained, examples) {
    const auto varphi = generate_constrained({kH, 0.0, 0.0, 0.0, Branch::plus_pi});
    EXPECT_NEAR(std::abs(varphi[0]), kH, 1e-15);
    EXPECT_NEAR(std::abs(varphi[3]), kH, 1e-15);
    EXPECT_EQ(varphi[1], Complex(0.0));
    EXPECT_EQ(varphi[2], Complex(0.0));

    // gamma = pi + 0 + 0 - pi/2 = pi/2, so a22 = i/2.
    const auto psi = generate_constrained({0.5, std::numbers::pi / 2, 0.0, 0.0, Branch::plus_pi});
    const auto ref = named_example(NamedExample::two_qubit_psi);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_LE(std::abs(psi[k] - ref[k]), 1e-15);
    }

    const auto psi_family = generate_constrained({0.0, 0.0, 0.3, 1.1, Branch::minus_pi});
    EXPECT_EQ(psi_family[0], Complex(0.0));
    EXPECT_EQ(psi_family[3], Complex(0.0));
    EXPECT_NEAR(std::arg(psi_family[2]) - std::arg(psi_family[1]), 0.8, 1e-12);

    EXPECT_THROW(generate_constrained({0.8, 0, 0, 0, Branch::plus_pi}), DomainError);
    EXPECT_THROW(generate_constrained({-1e-6, 0, 0, 0, Branch::plus_pi}), DomainError);
    EXPECT_NO_THROW(generate_constrained({kH + 1e-13, 0, 0, 0, Branch::plus_pi}));
}

TEST(GenerateConstrained, branches_describe_the_same_state) {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_constraint_params(rng);
        const auto a = generate_constrained(p);
        p.branch = Branch::minus_pi;
        const auto b = generate_constrained(p);
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_LE(std::abs(a[k] - b[k]), 1e-14);
        }
    }
}

TEST(GenerateConstrained, always_certified) {
    Rng rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        auto p = random_constraint_params(rng);
        p.branch = trial % 2 ? Branch::plus_pi : Branch::minus_pi;
        if (trial % 10 == 0) {
            p.r = trial % 20 == 0 ? 0.0 : kH;
        }
        const auto s = generate_constrained(p);
        EXPECT_TRUE(criterion_check(s, 1e-12).satisfied);
        EXPECT_TRUE(constraint_check(as_coefficient_matrix(s), 1e-9).satisfied);
        EXPECT_NEAR(std::abs(s[0]), p.r, 1e-15);
    }
}

TEST(HaarState, norm_and_determinism) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto a = haar_random_state(n, seed);
            double norm2 = 0.0;
            for (const auto &x : a.amplitudes()) {
                norm2 += std::norm(x);
            }
            EXPECT_NEAR(norm2, 1.0, 1e-12);
            const auto b = haar_random_state(n, seed);
            for (std::size_t k = 0; k < a.dim(); ++k) {
                ASSERT_EQ(a[k], b[k]);
            }
        }
    }
    EXPECT_THROW(haar_random_state(0, 1), DomainError);
    EXPECT_THROW(haar_random_state(9, 1), DomainError);
}

TEST(HaarState, mean_entropy_has_strict_gap) {
    Rng rng(7);
    double sum = 0.0;
    const int samples = 10000;
    for (int k = 0; k < samples; ++k) {
        const auto s = haar_random_state(2, rng);
        const auto rho = oracle::reduced_density({s.amplitudes().begin(), s.amplitudes().end()}, 2, 1);
        // Eigenvalues of the 2x2 oracle density via trace and determinant.
        const double det = (rho[0][0] * rho[1][1] - rho[0][1] * rho[1][0]).real();
        const double disc = std::sqrt(std::max(0.0, 0.25 - det));
        sum += oracle::binary_entropy(0.5 + disc);
    }
    EXPECT_GE(kLn2 - sum / samples, 0.05);
}

TEST(HaarSu2, unitary_with_unit_determinant) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto u = haar_random_su2(seed);
        EXPECT_NEAR(std::abs(u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0)), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0) - 1.0), 0.0, 1e-12);
        EXPECT_LE(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(2)), 1e-12);
    }
}

TEST(HaarSu2, first_moment_of_u11) {
    // Quadrature oracle: with |u11| = cos(eta) and Haar density
    // proportional to cos(eta) sin(eta) on [0, pi/2], E|u11|^2 is the ratio
    // of the two integrals below (Simpson's rule).
    auto simpson = [](auto f) {
        const int m = 2000;
        const double h = (std::numbers::pi / 2) / m;
        double s = f(0.0) + f(std::numbers::pi / 2);
        for (int k = 1; k < m; ++k) {
            s += (k % 2 ? 4.0 : 2.0) * f(k * h);
        }
        return s * h / 3.0;
    };
    const double moment =
        simpson([](double e) { return std::pow(std::cos(e), 3) * std::sin(e); }) /
        simpson([](double e) { return std::cos(e) * std::sin(e); });
    EXPECT_NEAR(moment, 0.5, 1e-10);

    Rng rng(11);
    double sum = 0.0;
    const int samples = 100000;
    for (int k = 0; k < samples; ++k) {
        sum += std::norm(haar_random_su2(rng)(0, 0));
    }
    EXPECT_NEAR(sum / samples, moment, 0.005);
}

TEST(Cost, examples) {
    EXPECT_NEAR(cost(epr_family(EprKind::varphi, 0.0)), 0.0, 1e-30);
    EXPECT_DOUBLE_EQ(cost(from_amplitudes(std::vector<Complex>{1, 0, 0, 0})), 2.0);
    EXPECT_NEAR(cost(ghz(Sign::plus)), 0.0, 1e-30);
    EXPECT_LE(cost(named_example(NamedExample::three_qubit_nontrivial)), 1e-12);
}

TEST(Cost, matches_oracle_and_is_phase_invariant) {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = haar_random_state(1 + trial % 4, rng);
        EXPECT_NEAR(cost(s), oracle_cost(s), 1e-12);
        const Complex phase = std::polar(1.0, rng.uniform(0.0, 6.3));
        std::vector<Complex> rotated(s.amplitudes().begin(), s.amplitudes().end());
        for (auto &a : rotated) {
            a *= phase;
        }
        EXPECT_NEAR(cost(from_amplitudes(rotated)), cost(s), 1e-12);
    }
}

TEST(Cost, raw_cost_scales_with_norm_to_the_fourth) {
    const auto s = haar_random_state(3, 17);
    std::vector<Complex> scaled(s.amplitudes().begin(), s.amplitudes().end());
    for (auto &a : scaled) {
        a *= 2.0;
    }
    EXPECT_NEAR(raw_cost(scaled, 3), 16.0 * cost(s), 1e-12);
    EXPECT_THROW(raw_cost(scaled, 2), SizeError);
}

TEST(Gradient, matches_central_differences) {
    Rng rng(19);
    const double h = 1e-6;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const auto s = haar_random_state(n, rng);
        std::vector<Complex> psi(s.amplitudes().begin(), s.amplitudes().end());
        const auto g = cost_gradient(psi, n);
        double num2 = 0.0, err2 = 0.0;
        for (std::size_t k = 0; k < psi.size(); ++k) {
            Complex fd;
            for (int part = 0; part < 2; ++part) {
                const Complex dir = part == 0 ? Complex{1.0, 0.0} : kI;
                auto plus = psi, minus = psi;
                plus[k] += h * dir;
                minus[k] -= h * dir;
                const double d = (raw_cost(plus, n) - raw_cost(minus, n)) / (2.0 * h);
                fd += part == 0 ? Complex{d, 0.0} : Complex{0.0, d};
            }
            num2 += std::norm(fd);
            err2 += std::norm(fd - g[k]);
        }
        EXPECT_LE(std::sqrt(err2), 1e-4 * std::sqrt(num2));
    }
}

TEST(Optimize, already_optimal) {
    const auto out = optimize(epr_family(EprKind::varphi, 0.0), 1e-12);
    EXPECT_TRUE(out.converged);
    EXPECT_EQ(out.iterations, 0u);
    EXPECT_EQ(out.final_cost, 0.0);
    EXPECT_THROW(optimize(epr_family(EprKind::varphi, 0.0), 0.0), DomainError);
}

TEST(Optimize, escapes_product_critical_point) {
    const auto out = optimize(from_amplitudes(std::vector<Complex>{1, 0, 0, 0}), 1e-12);
    EXPECT_TRUE(out.converged);
    EXPECT_LE(out.final_cost, 1e-12);
    for (std::size_t site : {1u, 2u}) {
        EXPECT_NEAR(reduced_entropy(out.state, site).entropy_nats, kLn2, 1e-6);
    }
}

TEST(Optimize, three_qubit_random_starts) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto out = optimize(haar_random_state(3, seed), 1e-12);
        ASSERT_TRUE(out.converged) << "seed " << seed;
        for (std::size_t site = 1; site <= 3; ++site) {
            EXPECT_NEAR(reduced_entropy(out.state, site).entropy_nats, kLn2, 1e-6);
        }
    }
}

TEST(Optimize, monotone_descent_and_starvation) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto start = haar_random_state(2 + seed % 3, seed);
        double previous = cost(start);
        std::size_t calls = 0;
        const auto out = optimize(start, 1e-14, kDefaultMaxIter, [&](std::size_t iter, double c) {
            EXPECT_EQ(iter, ++calls);
            EXPECT_LE(c, previous);
            previous = c;
        });
        EXPECT_EQ(out.iterations, calls);
        EXPECT_EQ(out.final_cost, previous);
        EXPECT_NEAR(out.final_cost, cost(out.state), 1e-15);
    }
    const auto starved = optimize(from_amplitudes(std::vector<Complex>{1, 0, 0, 0}), 1e-12, 1);
    EXPECT_FALSE(starved.converged);
    EXPECT_EQ(starved.iterations, 1u);
    EXPECT_LT(starved.final_cost, 2.0);
}

TEST(MultiStart, examples) {
    const auto single = multi_start(2, 1, 1e-12, 7);
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].seed, derive_seed(7, 0));

    const auto runs = multi_start(3, 30, 1e-12, 11);
    ASSERT_EQ(runs.size(), 30u);
    for (std::size_t k = 1; k < runs.size(); ++k) {
        EXPECT_LE(runs[k - 1].final_cost, runs[k].final_cost);
    }
    for (const auto &r : runs) {
        EXPECT_TRUE(r.converged);
        EXPECT_TRUE(criterion_check(r.state, 1e-5).satisfied);
    }
    EXPECT_THROW(multi_start(2, 0, 1e-12, 1), DomainError);
}

TEST(MultiStart, start_matches_direct_optimize) {
    const auto runs = multi_start(2, 4, 1e-12, 23);
    for (const auto &r : runs) {
        const auto direct = optimize(haar_random_state(2, r.seed), 1e-12);
        EXPECT_EQ(direct.final_cost, r.final_cost);
        EXPECT_EQ(direct.iterations, r.iterations);
    }
}
