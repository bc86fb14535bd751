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

#include "maxent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "maxent/batch.hpp"
#include "maxent/measurement.hpp"
#include "maxent/search.hpp"

namespace maxent {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kInvarianceTol = 1e-9;
constexpr double kCouplingSlack = 1e-12;
constexpr double kCorrelationTol = 1e-6;
constexpr double kCompletenessCost = 1e-18;

struct Verdicts {
    bool criterion;
    bool constraint;
    bool entropy;
    bool marginal;
};

Verdicts verdicts(const StateVector &s, const VerifyOptions &opt) {
    const auto cert = certify(s, opt.criterion_tol);
    bool entropy = true;
    for (const auto &e : cert.entropies) {
        entropy = entropy && std::abs(e.entropy_nats - kLn2) <= opt.criterion_tol;
    }
    return {cert.criterion.satisfied,
            constraint_check(as_coefficient_matrix(s), opt.constraint_tol).satisfied, entropy,
            cert.max_density_deviation <= opt.criterion_tol};
}

double tt_defect(const CorrelationMatrix &m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < 3; ++k) {
                dot += m.t[i][k] * m.t[j][k];
            }
            const double d = dot - (i == j ? 1.0 : 0.0);
            sum += d * d;
        }
    }
    return std::sqrt(sum);
}

StateVector random_lu(const StateVector &s, Rng &rng) {
    std::vector<ComplexMatrix> u;
    for (std::size_t k = 0; k < s.n_qubits(); ++k) {
        u.push_back(haar_random_su2(rng));
    }
    return apply_local_unitaries(s, u);
}

void tally(PropertyResult &p, bool ok) {
    ++p.checked;
    p.passed += ok ? 1 : 0;
}

} // namespace

bool VerifyReport::all_passed() const noexcept {
    return !properties.empty() &&
           std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult &p) { return p.ok(); });
}

StateVector perturb_state(const StateVector &state, double epsilon, Rng &rng) {
    std::vector<Complex> dir(state.dim());
    double norm2 = 0.0;
    for (auto &d : dir) {
        const double re = rng.normal();
        const double im = rng.normal();
        d = {re, im};
        norm2 += std::norm(d);
    }
    const double scale = epsilon / std::sqrt(norm2);
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] += scale * dir[i];
    }
    return from_amplitudes(amps);
}

VerifyReport run_verification(const VerifyOptions &opt) {
    if (opt.trials < 1) {
        throw DomainError("run_verification: trials must be >= 1");
    }
    PropertyResult constructive{"constructive"}, completeness{"completeness"},
        consistency{"consistency"}, lu{"lu-invariance"}, comm{"commutator"},
        coupling{"coupling"}, corr{"correlation"};

    const std::array<StateVector, 3> three_qubit_seeds{
        ghz(Sign::plus), ghz(Sign::minus), named_example(NamedExample::three_qubit_nontrivial)};

    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        Rng rng(derive_seed(opt.seed, trial));
        auto maximal = generate_constrained(random_constraint_params(rng));
        if (opt.perturb > 0.0) {
            maximal = perturb_state(maximal, opt.perturb, rng);
        }
        const auto random2 = haar_random_state(2, rng);

        {
            const auto v = verdicts(maximal, opt);
            tally(constructive, v.criterion && v.constraint && v.entropy && v.marginal);
        }
        {
            const auto endpoint = optimize(haar_random_state(2, rng), kCompletenessCost);
            tally(completeness,
                  endpoint.final_cost <= kCompletenessCost &&
                      constraint_check(as_coefficient_matrix(endpoint.state), opt.constraint_tol)
                          .satisfied);
        }
        {
            const auto near = perturb_state(maximal, 1e-3, rng);
            bool agree = true;
            for (const auto &s : {random2, near}) {
                const auto v = verdicts(s, opt);
                agree = agree && v.criterion == v.constraint && v.criterion == v.entropy &&
                        v.criterion == v.marginal;
            }
            tally(consistency, agree);
        }
        {
            const auto &base = (trial % 2 == 0) ? maximal : random2;
            const auto rotated = random_lu(base, rng);
            bool ok = true;
            for (std::size_t site = 1; site <= 2; ++site) {
                ok = ok && std::abs(reduced_entropy(base, site).entropy_nats -
                                    reduced_entropy(rotated, site).entropy_nats) <= kInvarianceTol;
            }
            const auto [b1, b2] = schmidt_coefficients(base);
            const auto [r1, r2] = schmidt_coefficients(rotated);
            ok = ok && std::abs(b1 - r1) <= kInvarianceTol && std::abs(b2 - r2) <= kInvarianceTol;
            ok = ok && criterion_check(base, opt.criterion_tol).satisfied ==
                           criterion_check(rotated, opt.criterion_tol).satisfied;
            ok = ok && std::abs(trace_invariant(base) - trace_invariant(rotated)) <= kInvarianceTol;
            tally(lu, ok);
        }
        {
            auto three = random_lu(three_qubit_seeds[trial % three_qubit_seeds.size()], rng);
            if (opt.perturb > 0.0) {
                three = perturb_state(three, opt.perturb, rng);
            }
            bool ok = true;
            for (const auto *s : {&maximal, &three}) {
                for (std::size_t site = 1; site <= s->n_qubits(); ++site) {
                    ok = ok && commutator_defect(*s, site) <= opt.criterion_tol;
                }
            }
            tally(comm, ok);
        }
        {
            bool ok = true;
            for (std::size_t site = 1; site <= 2; ++site) {
                const auto b = bloch_vector(random2, site);
                const double b2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
                ok = ok && kLn2 - reduced_entropy(random2, site).entropy_nats - b2 / 2.0 >=
                               -kCouplingSlack;
            }
            tally(coupling, ok);
        }
        tally(corr, tt_defect(correlation_matrix(maximal, 1, 2)) <= kCorrelationTol);
    }
    return {{constructive, completeness, consistency, lu, comm, coupling, corr}};
}

} // namespace maxent
