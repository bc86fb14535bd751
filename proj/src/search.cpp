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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

namespace maxent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Bloch vectors of every site, computed from pair sums over the amplitudes.
/// Works on unnormalized input (the result scales with the squared norm).
std::vector<std::array<double, 3>> raw_bloch_vectors(std::span<const Complex> psi,
                                                     std::size_t n) {
    std::vector<std::array<double, 3>> out(n);
    for (std::size_t site = 1; site <= n; ++site) {
        const std::size_t stride = std::size_t{1} << (n - site);
        double p0 = 0.0, p1 = 0.0;
        Complex cross = 0.0; // sum conj(psi0) psi1
        for (std::size_t i = 0; i < psi.size(); ++i) {
            if (i & stride) {
                continue;
            }
            const Complex lo = psi[i];
            const Complex hi = psi[i | stride];
            p0 += std::norm(lo);
            p1 += std::norm(hi);
            cross += std::conj(lo) * hi;
        }
        out[site - 1] = {2.0 * cross.real(), 2.0 * cross.imag(), p0 - p1};
    }
    return out;
}

void check_qubits(std::span<const Complex> psi, std::size_t n) {
    if (n == 0 || n > kMaxQubits || psi.size() != (std::size_t{1} << n)) {
        throw SizeError("amplitude count does not match 2^n for n in 1..8");
    }
}

std::vector<Complex> normalized(std::vector<Complex> v) {
    double norm2 = 0.0;
    for (const auto &a : v) {
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto &a : v) {
        a *= inv;
    }
    return v;
}

} // namespace

StateVector generate_constrained(const ConstraintParams &params) {
    const double r_max = 1.0 / std::numbers::sqrt2;
    if (!(params.r >= -1e-12) || !(params.r <= r_max + 1e-12)) {
        throw DomainError("generate_constrained: r = " + std::to_string(params.r) +
                          " outside [0, 1/sqrt2]");
    }
    const double r = std::clamp(params.r, 0.0, r_max);
    // r_max^2 rounds above 1/2, so the endpoint is pinned explicitly.
    const double s = r == r_max ? 0.0 : std::sqrt(std::max(0.0, 0.5 - r * r));
    const double branch = params.branch == Branch::plus_pi ? std::numbers::pi : -std::numbers::pi;
    const double gamma = branch + params.beta + params.delta - params.alpha;
    // Zero-modulus entries carry phase 0.
    auto entry = [](double modulus, double phase) {
        return modulus == 0.0 ? Complex{0.0, 0.0} : std::polar(modulus, phase);
    };
    const std::vector<Complex> amps{entry(r, params.alpha), entry(s, params.beta),
                                    entry(s, params.delta), entry(r, gamma)};
    return from_amplitudes(amps);
}

ConstraintParams random_constraint_params(Rng &rng) {
    ConstraintParams p;
    p.r = std::sqrt(rng.uniform(0.0, 0.5));
    p.alpha = rng.uniform(0.0, kTwoPi);
    p.beta = rng.uniform(0.0, kTwoPi);
    p.delta = rng.uniform(0.0, kTwoPi);
    p.branch = Branch::plus_pi;
    return p;
}

StateVector haar_random_state(std::size_t n_qubits, std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_state(n_qubits, rng);
}

StateVector haar_random_state(std::size_t n_qubits, Rng &rng) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw DomainError("haar_random_state: n = " + std::to_string(n_qubits) +
                          " outside 1..8");
    }
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    for (auto &a : amps) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = {re, im};
    }
    return from_amplitudes(amps);
}

ComplexMatrix haar_random_su2(std::uint64_t seed) {
    Rng rng(seed);
    return haar_random_su2(rng);
}

ComplexMatrix haar_random_su2(Rng &rng) {
    std::array<double, 4> g{};
    double norm2 = 0.0;
    for (auto &x : g) {
        x = rng.normal();
        norm2 += x * x;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    const Complex a{g[0] * inv, g[1] * inv};
    const Complex b{g[2] * inv, g[3] * inv};
    return {{a, -std::conj(b)}, {b, std::conj(a)}};
}

double cost(const StateVector &state) { return raw_cost(state.amplitudes(), state.n_qubits()); }

double raw_cost(std::span<const Complex> amplitudes, std::size_t n_qubits) {
    check_qubits(amplitudes, n_qubits);
    double c = 0.0;
    for (const auto &b : raw_bloch_vectors(amplitudes, n_qubits)) {
        c += b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
    }
    return c;
}

std::vector<Complex> cost_gradient(std::span<const Complex> amplitudes, std::size_t n_qubits) {
    check_qubits(amplitudes, n_qubits);
    const auto bloch = raw_bloch_vectors(amplitudes, n_qubits);
    constexpr Complex i{0.0, 1.0};
    std::vector<Complex> g(amplitudes.size(), 0.0);
    // d/dpsi* of (psi^dag O psi)^2 summed over O, times 2 for the real packing:
    // g = 4 sum e_O O psi.
    for (std::size_t site = 1; site <= n_qubits; ++site) {
        const auto [ex, ey, ez] = bloch[site - 1];
        const std::size_t stride = std::size_t{1} << (n_qubits - site);
        for (std::size_t k = 0; k < amplitudes.size(); ++k) {
            if (k & stride) {
                continue;
            }
            const Complex lo = amplitudes[k];
            const Complex hi = amplitudes[k | stride];
            g[k] += 4.0 * (ex * hi - i * ey * hi + ez * lo);
            g[k | stride] += 4.0 * (ex * lo + i * ey * lo - ez * hi);
        }
    }
    return g;
}

SearchOutcome optimize(const StateVector &initial, double tol, std::size_t max_iter,
                       const IterationObserver &observer) {
    if (!(tol > 0.0)) {
        throw DomainError("optimize: tol must be positive");
    }
    const std::size_t n = initial.n_qubits();
    std::vector<Complex> psi(initial.amplitudes().begin(), initial.amplitudes().end());
    double current = raw_cost(psi, n);
    std::size_t iter = 0;

    constexpr double kArmijo = 0.25;
    constexpr double kMinStep = 1e-14;
    constexpr int kEscapeTries = 16;
    constexpr double kEscapeRadius = 1e-2;

    while (current > tol && iter < max_iter) {
        auto grad = cost_gradient(psi, n);
        // Tangent projection: g - Re<psi, g> psi.
        double radial = 0.0;
        for (std::size_t k = 0; k < psi.size(); ++k) {
            radial += (std::conj(psi[k]) * grad[k]).real();
        }
        double gnorm2 = 0.0;
        for (std::size_t k = 0; k < psi.size(); ++k) {
            grad[k] -= radial * psi[k];
            gnorm2 += std::norm(grad[k]);
        }

        bool accepted = false;
        std::vector<Complex> candidate(psi.size());
        for (double step = 0.5; step >= kMinStep && gnorm2 > 0.0; step *= 0.5) {
            for (std::size_t k = 0; k < psi.size(); ++k) {
                candidate[k] = psi[k] - step * grad[k];
            }
            candidate = normalized(std::move(candidate));
            const double trial = raw_cost(candidate, n);
            if (trial < current && trial <= current - kArmijo * step * gnorm2) {
                psi.swap(candidate);
                current = trial;
                accepted = true;
                break;
            }
        }

        if (!accepted) {
            // Critical point above the zero set: try deterministic kicks.
            Rng kick(derive_seed(0x6b69636bULL, iter));
            for (int t = 0; t < kEscapeTries && !accepted; ++t) {
                for (std::size_t k = 0; k < psi.size(); ++k) {
                    const double re = kick.normal();
                    const double im = kick.normal();
                    candidate[k] = psi[k] + kEscapeRadius * Complex{re, im};
                }
                candidate = normalized(std::move(candidate));
                const double trial = raw_cost(candidate, n);
                if (trial < current) {
                    psi.swap(candidate);
                    current = trial;
                    accepted = true;
                }
            }
        }
        if (!accepted) {
            break;
        }
        ++iter;
        if (observer) {
            observer(iter, current);
        }
    }

    return {from_amplitudes(psi), current, iter, current <= tol, 0};
}

std::vector<SearchOutcome> multi_start(std::size_t n_qubits, std::size_t starts, double tol,
                                       std::uint64_t seed, std::size_t max_iter) {
    if (starts < 1) {
        throw DomainError("multi_start: starts must be >= 1");
    }
    std::vector<std::optional<SearchOutcome>> slots(starts);
    const auto count = static_cast<std::int64_t>(starts);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
        const std::uint64_t start_seed = derive_seed(seed, static_cast<std::uint64_t>(k));
        auto outcome = optimize(haar_random_state(n_qubits, start_seed), tol, max_iter);
        outcome.seed = start_seed;
        slots[static_cast<std::size_t>(k)] = std::move(outcome);
    }
    std::vector<SearchOutcome> results;
    results.reserve(starts);
    for (auto &slot : slots) {
        results.push_back(std::move(*slot));
    }
    std::stable_sort(results.begin(), results.end(),
                     [](const SearchOutcome &a, const SearchOutcome &b) {
                         return a.final_cost < b.final_cost;
                     });
    return results;
}

} // namespace maxent
