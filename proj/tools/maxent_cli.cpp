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

// maxent: analyze, generate, search for, verify and sample qubit pure states.
//
// Exit codes: 0 success or passing verdict, 1 failing verdict, 2 usage or
// input error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxent/entanglement.hpp"
#include "maxent/measurement.hpp"
#include "maxent/search.hpp"
#include "maxent/state_io.hpp"
#include "maxent/verify.hpp"

namespace {

using namespace maxent;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string padded(const std::string &s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string col(double x) { return padded(num(x), 17); }

double bits(double nats) { return nats / std::numbers::ln2; }

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    std::string path;
    double tol = kDefaultCriterionTol;
    double constraint_tol = kDefaultConstraintTol;
    bool json = false;
};

json analysis_json(const StateVector &s, const std::optional<std::string> &label,
                   const AnalyzeArgs &args) {
    const std::size_t n = s.n_qubits();
    json doc;
    doc["n_qubits"] = n;
    if (label) {
        doc["label"] = *label;
    }
    json sites = json::array();
    for (std::size_t site = 1; site <= n; ++site) {
        json entry;
        entry["site"] = site;
        const auto b = bloch_vector(s, site);
        entry["expectations"] = {b[0], b[1], b[2]};
        entry["variances"] = {1.0 - b[0] * b[0], 1.0 - b[1] * b[1], 1.0 - b[2] * b[2]};
        const auto e = reduced_entropy(s, site);
        entry["eigenvalues"] = {e.eigenvalues.first, e.eigenvalues.second};
        entry["entropy_nats"] = e.entropy_nats;
        entry["entropy_bits"] = bits(e.entropy_nats);
        entry["commutator_defect"] = commutator_defect(s, site);
        sites.push_back(entry);
    }
    doc["sites"] = sites;

    json pairs = json::array();
    for (std::size_t a = 1; a <= n; ++a) {
        for (std::size_t b = a + 1; b <= n; ++b) {
            const auto t = correlation_matrix(s, a, b);
            json rows = json::array();
            for (const auto &row : t.t) {
                rows.push_back({row[0], row[1], row[2]});
            }
            pairs.push_back({{"sites", {a, b}}, {"matrix", rows}});
        }
    }
    doc["correlations"] = pairs;

    const auto crit = criterion_check(s, args.tol);
    doc["criterion"] = {{"satisfied", crit.satisfied},
                        {"max_abs_expectation", crit.max_abs_expectation},
                        {"tolerance", crit.tolerance}};
    if (n == 2) {
        const auto con = constraint_check(as_coefficient_matrix(s), args.constraint_tol);
        doc["constraint"] = {{"satisfied", con.satisfied},
                             {"degenerate", con.degenerate},
                             {"modulus_residuals",
                              {con.modulus_residuals[0], con.modulus_residuals[1],
                               con.modulus_residuals[2]}},
                             {"phase_residual", con.phase_residual},
                             {"tolerance", args.constraint_tol}};
        const auto [b1, b2] = schmidt_coefficients(s);
        doc["schmidt_coefficients"] = {b1, b2};
    }
    return doc;
}

void print_analysis(const StateVector &s, const std::optional<std::string> &label,
                    const AnalyzeArgs &args) {
    const std::size_t n = s.n_qubits();
    std::cout << "state: " << (label ? *label : std::string("(unlabelled)")) << ", " << n
              << (n == 1 ? " qubit\n" : " qubits\n");

    std::cout << "\nlocal expectations\n"
              << "site" << padded("<s1>", 17) << padded("<s2>", 17) << padded("<s3>", 17)
              << padded("var1", 17) << padded("var2", 17) << padded("var3", 17) << '\n';
    for (std::size_t site = 1; site <= n; ++site) {
        const auto b = bloch_vector(s, site);
        std::cout << padded(std::to_string(site), 4);
        for (double e : b) {
            std::cout << col(e);
        }
        for (double e : b) {
            std::cout << col(1.0 - e * e);
        }
        std::cout << '\n';
    }

    if (n >= 2) {
        std::cout << "\ncorrelation matrices T[l][m] = <s_l s_m> - <s_l><s_m>\n";
        for (std::size_t a = 1; a <= n; ++a) {
            for (std::size_t b = a + 1; b <= n; ++b) {
                const auto t = correlation_matrix(s, a, b);
                std::cout << "sites " << a << "," << b << '\n';
                for (const auto &row : t.t) {
                    std::cout << "    " << col(row[0]) << col(row[1]) << col(row[2]) << '\n';
                }
            }
        }
    }

    std::cout << "\nreduced entropies\n"
              << "site" << padded("lambda1", 17) << padded("lambda2", 17) << padded("S (nats)", 17)
              << padded("S (bits)", 17) << padded("[s,rho] defect", 17) << '\n';
    for (std::size_t site = 1; site <= n; ++site) {
        const auto e = reduced_entropy(s, site);
        std::cout << padded(std::to_string(site), 4) << col(e.eigenvalues.first)
                  << col(e.eigenvalues.second) << col(e.entropy_nats) << col(bits(e.entropy_nats))
                  << col(commutator_defect(s, site)) << '\n';
    }

    const auto crit = criterion_check(s, args.tol);
    std::cout << "\ncriterion: " << (crit.satisfied ? "satisfied" : "not satisfied")
              << " (max |<s>| = " << num(crit.max_abs_expectation) << ", tol " << num(args.tol)
              << ")\n";
    if (n == 2) {
        const auto con = constraint_check(as_coefficient_matrix(s), args.constraint_tol);
        std::cout << "constraint: " << (con.satisfied ? "satisfied" : "not satisfied")
                  << (con.degenerate ? " (degenerate, phase condition vacuous)" : "")
                  << "\n  modulus residuals " << num(con.modulus_residuals[0]) << ' '
                  << num(con.modulus_residuals[1]) << ' ' << num(con.modulus_residuals[2])
                  << "\n  phase residual " << num(con.phase_residual) << " (tol "
                  << num(args.constraint_tol) << ")\n";
        const auto [b1, b2] = schmidt_coefficients(s);
        std::cout << "schmidt coefficients: " << num(b1) << ' ' << num(b2) << '\n';
    }
}

int run_analyze(const AnalyzeArgs &args) {
    std::ifstream in(args.path);
    if (!in) {
        throw ParseError(0, "cannot open '" + args.path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto file = parse_state_file(buf.str());
    const auto state = to_state(file);
    if (args.json) {
        std::cout << analysis_json(state, file.label, args).dump(2) << '\n';
    } else {
        print_analysis(state, file.label, args);
    }
    return kExitOk;
}

// --------------------------------------------------------------- generate

struct GenerateArgs {
    std::string out;
    std::string kind = "varphi";
    double phase = 0.0;
    double b1 = 0.0, b2 = 0.0;
    std::string sign = "+";
    double r = 0.0, alpha = 0.0, beta = 0.0, delta = 0.0;
    std::string branch = "+";
    bool random = false;
    std::uint64_t seed = 1;
    std::string name;
};

Sign parse_sign(const std::string &s) {
    if (s == "+" || s == "plus") {
        return Sign::plus;
    }
    if (s == "-" || s == "minus") {
        return Sign::minus;
    }
    throw DomainError("sign must be + or -, got '" + s + "'");
}

int emit_state(const StateVector &s, const std::string &label, const std::string &out) {
    if (out.empty()) {
        std::cout << format_state_file(s, label);
    } else {
        write_state(out, s, label);
    }
    return kExitOk;
}

// --------------------------------------------------------------- commands

struct SearchArgs {
    std::size_t n = 2;
    std::size_t starts = 10;
    double tol = 1e-12;
    std::uint64_t seed = 1;
    std::size_t max_iter = kDefaultMaxIter;
    std::string out;
};

int run_search(const SearchArgs &args) {
    const auto runs = multi_start(args.n, args.starts, args.tol, args.seed, args.max_iter);
    std::cout << "rank" << padded("seed", 22) << padded("iterations", 12) << padded("cost", 17)
              << "  converged\n";
    for (std::size_t k = 0; k < runs.size(); ++k) {
        const auto &r = runs[k];
        std::cout << padded(std::to_string(k + 1), 4) << padded(std::to_string(r.seed), 22)
                  << padded(std::to_string(r.iterations), 12) << col(r.final_cost) << "  "
                  << (r.converged ? "yes" : "no") << '\n';
    }
    const auto &best = runs.front();
    std::size_t converged = 0;
    for (const auto &r : runs) {
        converged += r.converged ? 1 : 0;
    }
    std::cout << "\nconverged " << converged << "/" << runs.size() << " (tol " << num(args.tol)
              << ")\nbest cost " << num(best.final_cost) << ", entropies (nats):";
    for (std::size_t site = 1; site <= args.n; ++site) {
        std::cout << ' ' << num(reduced_entropy(best.state, site).entropy_nats);
    }
    std::cout << '\n';
    if (!args.out.empty()) {
        write_state(args.out, best.state,
                    "search n=" + std::to_string(args.n) + " seed=" + std::to_string(best.seed));
    }
    return best.converged ? kExitOk : kExitVerdict;
}

int run_verify(const VerifyOptions &options) {
    const auto report = run_verification(options);
    std::cout << "property      " << padded("passed", 10) << padded("checked", 10) << "  verdict\n";
    for (const auto &p : report.properties) {
        std::cout << p.name << std::string(p.name.size() < 14 ? 14 - p.name.size() : 0, ' ')
                  << padded(std::to_string(p.passed), 10) << padded(std::to_string(p.checked), 10)
                  << "  " << (p.ok() ? "PASS" : "FAIL") << '\n';
    }
    const bool ok = report.all_passed();
    std::cout << (ok ? "all properties passed\n" : "some properties failed\n");
    return ok ? kExitOk : kExitVerdict;
}

struct SampleArgs {
    std::string path;
    std::string bases;
    std::uint64_t shots = 1000;
    std::uint64_t seed = 1;
};

int run_sample(const SampleArgs &args) {
    const auto state = read_state(args.path);
    const auto bases = parse_bases(args.bases);
    if (bases.size() != state.n_qubits()) {
        throw SizeError("--bases has " + std::to_string(bases.size()) + " characters, state has " +
                        std::to_string(state.n_qubits()) + " qubits");
    }
    const auto record = sample_outcomes(state, bases, args.shots, args.seed);
    std::cout << format_shot_record(record);

    const auto shots = static_cast<double>(record.shots);
    const std::size_t n = state.n_qubits();
    std::vector<double> means(n);
    std::cout << "\nempirical expectations\n"
              << "site  basis" << padded("mean", 17) << padded("std err", 17) << '\n';
    for (std::size_t site = 1; site <= n; ++site) {
        const std::vector<std::size_t> one{site};
        const double m = empirical_mean(record, one);
        means[site - 1] = m;
        std::cout << padded(std::to_string(site), 4) << padded(std::string(1, axis_char(bases[site - 1])), 7)
                  << col(m) << col(std::sqrt(std::max(0.0, 1.0 - m * m) / shots)) << '\n';
    }
    if (n >= 2) {
        std::cout << "\nempirical correlations\n"
                  << "sites" << padded("<ab>", 17) << padded("std err", 17)
                  << padded("<ab>-<a><b>", 17) << padded("MI (nats)", 17) << padded("MI (bits)", 17)
                  << '\n';
        for (std::size_t a = 1; a <= n; ++a) {
            for (std::size_t b = a + 1; b <= n; ++b) {
                const std::vector<std::size_t> pair{a, b};
                const double m = empirical_mean(record, pair);
                const double mi = mutual_information(record, a, b);
                std::cout << padded(std::to_string(a) + "," + std::to_string(b), 5) << col(m)
                          << col(std::sqrt(std::max(0.0, 1.0 - m * m) / shots))
                          << col(m - means[a - 1] * means[b - 1]) << col(mi) << col(bits(mi))
                          << '\n';
            }
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Maximal-entanglement toolkit for qubit pure states"};
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    auto *analyze_cmd = app.add_subcommand("analyze", "Report expectations, correlations, "
                                                      "entropies and criterion verdicts");
    analyze_cmd->add_option("path", analyze.path, "State file")->required();
    analyze_cmd->add_option("--tol", analyze.tol, "Criterion tolerance")->capture_default_str();
    analyze_cmd->add_option("--constraint-tol", analyze.constraint_tol,
                            "Two-qubit constraint tolerance")
        ->capture_default_str();
    analyze_cmd->add_flag("--json", analyze.json, "Machine-readable output");

    GenerateArgs gen;
    auto *gen_cmd = app.add_subcommand("generate", "Write a state file for a named family");
    gen_cmd->require_subcommand(1);
    gen_cmd->fallthrough();
    gen_cmd->add_option("--out", gen.out, "Output path (default: stdout)");

    auto *epr_cmd = gen_cmd->add_subcommand("epr", "(|++> + e^{i phase}|-->)/sqrt2 or "
                                                   "(|+-> + e^{i phase}|-+>)/sqrt2");
    epr_cmd->add_option("--kind", gen.kind, "varphi or psi")
        ->check(CLI::IsMember({"varphi", "psi"}))
        ->capture_default_str();
    epr_cmd->add_option("--phase", gen.phase, "Relative phase (radians)")->capture_default_str();

    auto *schmidt_cmd = gen_cmd->add_subcommand("schmidt", "b1|++> + b2|-->");
    schmidt_cmd->add_option("--b1", gen.b1)->required();
    schmidt_cmd->add_option("--b2", gen.b2)->required();

    auto *ghz_cmd = gen_cmd->add_subcommand("ghz", "(|+++> +- |--->)/sqrt2");
    ghz_cmd->add_option("--sign", gen.sign, "+ or -")->capture_default_str();

    auto *con_cmd = gen_cmd->add_subcommand("constrained",
                                            "Two-qubit state with vanishing local expectations");
    auto *r_opt = con_cmd->add_option("--r", gen.r, "|a11|, in [0, 1/sqrt2]");
    auto *alpha_opt = con_cmd->add_option("--alpha", gen.alpha, "arg a11");
    auto *beta_opt = con_cmd->add_option("--beta", gen.beta, "arg a12");
    auto *delta_opt = con_cmd->add_option("--delta", gen.delta, "arg a21");
    auto *branch_opt = con_cmd->add_option("--branch", gen.branch, "+ or - (phase sum +-pi)");
    auto *random_flag = con_cmd->add_flag("--random", gen.random, "Draw parameters from --seed");
    con_cmd->add_option("--seed", gen.seed, "Seed for --random")->capture_default_str();
    for (auto *opt : {r_opt, alpha_opt, beta_opt, delta_opt, branch_opt}) {
        random_flag->excludes(opt);
    }

    auto *example_cmd = gen_cmd->add_subcommand("example", "Named example state");
    example_cmd->add_option("--name", gen.name,
                            "two_qubit_psi, two_qubit_psi_prime or three_qubit_nontrivial")
        ->required();

    SearchArgs search;
    auto *search_cmd = app.add_subcommand("search", "Multi-start descent on the sum of squared "
                                                    "local expectations");
    search_cmd->add_option("--n", search.n, "Qubits")->check(CLI::Range(2, 8))->capture_default_str();
    search_cmd->add_option("--starts", search.starts)->check(CLI::PositiveNumber)->capture_default_str();
    search_cmd->add_option("--tol", search.tol, "Cost threshold")->check(CLI::PositiveNumber)->capture_default_str();
    search_cmd->add_option("--seed", search.seed)->capture_default_str();
    search_cmd->add_option("--max-iter", search.max_iter)->check(CLI::PositiveNumber)->capture_default_str();
    search_cmd->add_option("--out", search.out, "Write the best state here");

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run the cross-module property suite");
    verify_cmd->add_option("--trials", verify.trials)->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
    verify_cmd->add_option("--tol", verify.criterion_tol, "Criterion tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--constraint-tol", verify.constraint_tol)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--perturb", verify.perturb,
                           "Displace criterion states by this norm (fault injection)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    SampleArgs sample;
    auto *sample_cmd = app.add_subcommand("sample", "Simulate projective Pauli measurements");
    sample_cmd->add_option("path", sample.path, "State file")->required();
    sample_cmd->add_option("--bases", sample.bases,
                           "One of x, y, z per qubit (sigma_1, sigma_2, sigma_3)")
        ->required();
    sample_cmd->add_option("--shots", sample.shots)->check(CLI::PositiveNumber)->capture_default_str();
    sample_cmd->add_option("--seed", sample.seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze_cmd) {
            return run_analyze(analyze);
        }
        if (*gen_cmd) {
            if (*epr_cmd) {
                const auto kind = gen.kind == "psi" ? EprKind::psi : EprKind::varphi;
                return emit_state(epr_family(kind, gen.phase),
                                  "epr " + gen.kind + " phase=" + num(gen.phase), gen.out);
            }
            if (*schmidt_cmd) {
                return emit_state(schmidt_state(gen.b1, gen.b2),
                                  "schmidt b1=" + num(gen.b1) + " b2=" + num(gen.b2), gen.out);
            }
            if (*ghz_cmd) {
                const auto sign = parse_sign(gen.sign);
                return emit_state(ghz(sign), sign == Sign::plus ? "ghz+" : "ghz-", gen.out);
            }
            if (*con_cmd) {
                ConstraintParams p;
                if (gen.random) {
                    Rng rng(gen.seed);
                    p = random_constraint_params(rng);
                } else {
                    if (r_opt->count() == 0) {
                        throw DomainError("constrained needs --r or --random");
                    }
                    p = {gen.r, gen.alpha, gen.beta, gen.delta,
                         parse_sign(gen.branch) == Sign::plus ? Branch::plus_pi : Branch::minus_pi};
                }
                const std::string label =
                    "constrained r=" + num(p.r) + " alpha=" + num(p.alpha) + " beta=" +
                    num(p.beta) + " delta=" + num(p.delta) +
                    (p.branch == Branch::plus_pi ? " branch=+" : " branch=-");
                return emit_state(generate_constrained(p), label, gen.out);
            }
            const auto which = parse_named_example(gen.name);
            return emit_state(named_example(which), std::string(to_string(which)), gen.out);
        }
        if (*search_cmd) {
            return run_search(search);
        }
        if (*verify_cmd) {
            return run_verify(verify);
        }
        return run_sample(sample);
    } catch (const ParseError &e) {
        const std::string &path = *analyze_cmd ? analyze.path : sample.path;
        std::cerr << "error: " << (path.empty() ? "" : path + ": ") << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
