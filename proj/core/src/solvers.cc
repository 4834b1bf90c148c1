// Copyright 2026 The qcs Authors
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

#include "qcs/solvers.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "qcs/error.h"
#include "qcs/qaoa.h"
#include "qcs/seeding.h"

namespace qcs {

std::string_view to_string(Backend backend) {
    switch (backend) {
        case Backend::brute_force:
            return "brute";
        case Backend::chain_dp:
            return "chain";
        case Backend::qaoa:
            return "qaoa";
    }
    return "unknown";
}

Backend parse_backend(std::string_view name) {
    if (name == "brute" || name == "brute_force") {
        return Backend::brute_force;
    }
    if (name == "chain" || name == "chain_dp") {
        return Backend::chain_dp;
    }
    if (name == "qaoa") {
        return Backend::qaoa;
    }
    fail(ErrorKind::invalid_argument, "unknown solver backend '" + std::string(name) + "'");
}

SolverOutcome brute_force_solve(const MeasurementSet &ms, const Marginals &r) {
    const int n = ms.num_bits();
    if (n > kBruteForceBitLimit) {
        fail(ErrorKind::capacity, "brute force refused for n = " + std::to_string(n));
    }
    if (r.size() != ms.size()) {
        fail(ErrorKind::shape, "marginals length differs from pattern count");
    }
    std::uint64_t best_z = 0;
    double best = -1.0;
    for (std::uint64_t z = 0; z < index_space_size(n); z++) {
        double score = std::abs(column_dot(BitIndex(z, n), r, ms));
        if (score > best) {
            best = score;
            best_z = z;
        }
    }
    return SolverOutcome{BitIndex(best_z, n), best, {{"evaluated", static_cast<double>(index_space_size(n))}}};
}

ChainModel extract_chain(const IsingHamiltonian &h) {
    const int n = h.num_qubits();
    ChainModel chain;
    chain.field.assign(n, 0.0);
    chain.coupling.assign(n > 1 ? n - 1 : 0, 0.0);
    for (const auto &[mask, coeff] : h.mask_terms()) {
        auto support = h.support_of(mask);
        if (support.empty()) {
            chain.offset += coeff;
        } else if (support.size() == 1) {
            chain.field[support[0] - 1] += coeff;
        } else if (support.size() == 2 && support[1] == support[0] + 1) {
            chain.coupling[support[0] - 1] += coeff;
        } else {
            std::string desc;
            for (int q : support) {
                desc += " Z" + std::to_string(q);
            }
            fail(ErrorKind::structure, "term" + desc + " is not a nearest-neighbor chain term");
        }
    }
    return chain;
}

ChainExtremum chain_extremum(const ChainModel &chain, bool maximize) {
    const int n = static_cast<int>(chain.field.size());
    if (n < 1 || static_cast<int>(chain.coupling.size()) != std::max(n - 1, 0)) {
        fail(ErrorKind::shape, "chain model field/coupling sizes inconsistent");
    }
    constexpr std::array<double, 2> spin{1.0, -1.0};
    auto better = [maximize](double a, double b) { return maximize ? a > b : a < b; };

    // tail[j][b]: optimum of every term touching sites j..n-1 (0-based) given b_j = b.
    std::vector<std::array<double, 2>> tail(n);
    for (int b = 0; b < 2; b++) {
        tail[n - 1][b] = chain.field[n - 1] * spin[b];
    }
    auto step = [&](int j, int b, int next) { return chain.coupling[j] * spin[b] * spin[next] + tail[j + 1][next]; };
    for (int j = n - 2; j >= 0; j--) {
        for (int b = 0; b < 2; b++) {
            double v0 = step(j, b, 0);
            double v1 = step(j, b, 1);
            tail[j][b] = chain.field[j] * spin[b] + (better(v1, v0) ? v1 : v0);
        }
    }

    // Walk forward preferring bit 0 on ties: the lexicographically smallest
    // optimal string is the smallest index under the b_1-major convention.
    std::uint64_t z = 0;
    int b = better(tail[0][1], tail[0][0]) ? 1 : 0;
    double value = chain.offset + tail[0][b];
    z = static_cast<std::uint64_t>(b);
    for (int j = 0; j + 1 < n; j++) {
        int next = better(step(j, b, 1), step(j, b, 0)) ? 1 : 0;
        z = (z << 1) | static_cast<std::uint64_t>(next);
        b = next;
    }
    return ChainExtremum{BitIndex(z, n), value};
}

SolverOutcome chain_dp_solve(const MeasurementSet &ms, const Marginals &r) {
    IsingHamiltonian h = build_hamiltonian(ms, r);
    ChainModel chain = extract_chain(h);
    ChainExtremum top = chain_extremum(chain, true);
    ChainExtremum bottom = chain_extremum(chain, false);
    double top_score = std::abs(column_dot(top.position, r, ms));
    double bottom_score = std::abs(column_dot(bottom.position, r, ms));
    std::map<std::string, double> diag{{"max_value", top.value}, {"min_value", bottom.value}};
    if (top_score >= bottom_score) {
        return SolverOutcome{top.position, top_score, std::move(diag)};
    }
    return SolverOutcome{bottom.position, bottom_score, std::move(diag)};
}

SolverOutcome qaoa_solve(const MeasurementSet &ms, const Marginals &r, const QaoaSolverConfig &config) {
    const int n = ms.num_bits();
    if (n > kMaxQubits) {
        fail(ErrorKind::capacity, "QAOA simulation refused for n = " + std::to_string(n));
    }
    if (config.shots < 1) {
        fail(ErrorKind::invalid_argument, "shots must be at least 1");
    }
    IsingHamiltonian h = build_hamiltonian(ms, r);

    std::map<std::string, double> diag;
    std::vector<std::uint64_t> pool;
    int evaluations = 0;
    const std::array<IsingHamiltonian, 2> objectives{h, -h};
    for (std::size_t pass = 0; pass < objectives.size(); pass++) {
        OptimizerOptions opt;
        opt.depth = config.depth;
        opt.restarts = config.restarts;
        opt.max_evaluations = config.max_evaluations;
        opt.seed = derive_seed(config.seed, 2 * pass);
        OptimizationResult result = optimize(objectives[pass], opt);
        evaluations += result.evaluations;
        diag[pass == 0 ? "expectation_max" : "expectation_min"] = pass == 0 ? result.expectation : -result.expectation;

        StateVector state = ansatz_state(objectives[pass], result.params);
        for (const auto &z : sample_candidates(state, config.shots, derive_seed(config.seed, 2 * pass + 1))) {
            pool.push_back(z.value());
        }
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    std::uint64_t best_z = pool.front();
    double best = -1.0;
    for (auto z : pool) {
        double score = std::abs(column_dot(BitIndex(z, n), r, ms));
        if (score > best) {
            best = score;
            best_z = z;
        }
    }
    diag["evaluations"] = evaluations;
    diag["distinct_candidates"] = static_cast<double>(pool.size());
    return SolverOutcome{BitIndex(best_z, n), best, std::move(diag)};
}

SolverOutcome detect_support(const SolverSpec &spec, const MeasurementSet &ms, const Marginals &r,
                             std::uint64_t stream) {
    switch (spec.backend) {
        case Backend::brute_force:
            return brute_force_solve(ms, r);
        case Backend::chain_dp:
            return chain_dp_solve(ms, r);
        case Backend::qaoa: {
            QaoaSolverConfig cfg = spec.qaoa;
            cfg.seed = derive_seed(cfg.seed, stream);
            return qaoa_solve(ms, r, cfg);
        }
    }
    fail(ErrorKind::invalid_argument, "unknown backend");
}

}  // namespace qcs
