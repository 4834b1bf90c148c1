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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.h"
#include "qcs/error.h"
#include "qcs/signal.h"

using namespace qcs;

namespace {

struct DenseArgmax {
    std::uint64_t index;
    double score;
};

DenseArgmax dense_argmax(const MeasurementSet &ms, const Marginals &r) {
    oracle::Vector scores = oracle::dense_matrix(ms).transpose() * oracle::to_vector(r.values);
    DenseArgmax best{0, -1.0};
    for (Eigen::Index z = 0; z < scores.size(); z++) {
        if (std::abs(scores(z)) > best.score) {
            best = {static_cast<std::uint64_t>(z), std::abs(scores(z))};
        }
    }
    return best;
}

QaoaSolverConfig small_qaoa(std::uint64_t seed) {
    QaoaSolverConfig c;
    c.restarts = 3;
    c.seed = seed;
    return c;
}

}  // namespace

TEST(backend_names, round_trip) {
    for (Backend b : {Backend::brute_force, Backend::chain_dp, Backend::qaoa}) {
        EXPECT_EQ(parse_backend(to_string(b)), b);
    }
    EXPECT_THROW(parse_backend("annealer"), Error);
}

TEST(brute_force_solve, zero_residual_returns_first_index) {
    MeasurementSet ms = nearest_neighbor_patterns(4);
    SolverOutcome out = brute_force_solve(ms, Marginals{std::vector<double>(ms.size(), 0.0)});
    EXPECT_EQ(out.position.value(), 0u);
    EXPECT_EQ(out.score, 0.0);
}

TEST(brute_force_solve, single_point_pattern) {
    MeasurementSet ms(3, {Pattern({{1, 1}, {2, 0}, {3, 1}})});
    SolverOutcome out = brute_force_solve(ms, Marginals{{2.5}});
    EXPECT_EQ(out.position, BitIndex::parse("101"));
    EXPECT_DOUBLE_EQ(out.score, 2.5);
}

TEST(brute_force_solve, matches_dense_argmax) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; trial++) {
        int n = 2 + trial % 8;
        MeasurementSet ms = oracle::random_patterns(n, 3 + trial % 11, rng);
        Marginals r = oracle::random_residual(ms.size(), rng);
        DenseArgmax want = dense_argmax(ms, r);
        SolverOutcome got = brute_force_solve(ms, r);
        EXPECT_NEAR(got.score, want.score, 1e-12);
        EXPECT_EQ(got.position.value(), want.index);
    }
}

TEST(chain_extremum, single_field) {
    ChainModel one{0.0, {1.0}, {}};
    EXPECT_EQ(chain_extremum(one, true).position.value(), 0u);
    EXPECT_DOUBLE_EQ(chain_extremum(one, true).value, 1.0);
    EXPECT_EQ(chain_extremum(one, false).position.value(), 1u);
    EXPECT_DOUBLE_EQ(chain_extremum(one, false).value, -1.0);
}

TEST(chain_extremum, ties_pick_smallest_index) {
    ChainModel flat{0.5, {0.0, 0.0, 0.0}, {0.0, 0.0}};
    EXPECT_EQ(chain_extremum(flat, true).position.value(), 0u);
    ChainModel anti{0.0, {0.0, 0.0}, {-1.0}};
    EXPECT_EQ(chain_extremum(anti, true).position, BitIndex::parse("01"));
}

TEST(extract_chain, rejects_long_range_terms) {
    IsingHamiltonian h(4);
    h.add_term(std::vector<int>{1, 3}, 0.2);
    try {
        extract_chain(h);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::structure);
    }
    MeasurementSet quad = random_quadruplet_patterns(5, 2, 1);
    std::mt19937_64 rng(2);
    EXPECT_THROW(chain_dp_solve(quad, oracle::random_residual(quad.size(), rng)), Error);
}

TEST(chain_dp_solve, equals_brute_force_on_nearest_neighbor_residuals) {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 120; trial++) {
        int n = 2 + trial % 11;
        MeasurementSet ms = nearest_neighbor_patterns(n);
        Marginals r = (trial % 3 == 0) ? oracle::random_residual(ms.size(), rng, 0.0, 1.0)
                                       : oracle::random_residual(ms.size(), rng);
        SolverOutcome bf = brute_force_solve(ms, r);
        SolverOutcome dp = chain_dp_solve(ms, r);
        EXPECT_NEAR(dp.score, bf.score, 1e-12 * std::max(1.0, bf.score)) << "n=" << n;
        EXPECT_NEAR(std::abs(column_dot(dp.position, r, ms)), dp.score, 1e-12);
    }
}

TEST(chain_dp_solve, zero_residual) {
    MeasurementSet ms = nearest_neighbor_patterns(5);
    SolverOutcome out = chain_dp_solve(ms, Marginals{std::vector<double>(ms.size(), 0.0)});
    EXPECT_EQ(out.score, 0.0);
    EXPECT_EQ(out.position.value(), 0u);
}

TEST(qaoa_solve, flat_residual_scores_zero) {
    MeasurementSet ms = nearest_neighbor_patterns(3);
    SolverOutcome out = qaoa_solve(ms, Marginals{std::vector<double>(ms.size(), 0.0)}, small_qaoa(1));
    EXPECT_EQ(out.score, 0.0);
}

TEST(qaoa_solve, sound_and_dominated_by_brute_force) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 12; trial++) {
        int n = 3 + trial % 4;
        MeasurementSet ms = oracle::random_patterns(n, 6, rng);
        Marginals r = oracle::random_residual(ms.size(), rng);
        SolverOutcome q = qaoa_solve(ms, r, small_qaoa(trial));
        EXPECT_NEAR(q.score, std::abs(column_dot(q.position, r, ms)), 1e-12);
        EXPECT_LE(q.score, brute_force_solve(ms, r).score + 1e-12);
    }
}

TEST(qaoa_solve, deterministic_under_seed) {
    MeasurementSet ms = nearest_neighbor_patterns(5);
    std::mt19937_64 rng(6);
    Marginals r = oracle::random_residual(ms.size(), rng);
    SolverOutcome a = qaoa_solve(ms, r, small_qaoa(9));
    SolverOutcome b = qaoa_solve(ms, r, small_qaoa(9));
    EXPECT_EQ(a.position, b.position);
    EXPECT_EQ(a.score, b.score);
}

TEST(qaoa_solve, finds_single_spike_under_quadruplet_patterns) {
    int found = 0;
    const int seeds = 20;
    for (int seed = 0; seed < seeds; seed++) {
        SparseSignal x = random_sparse_signal(6, 1, ValueRange{}, 100 + seed);
        MeasurementSet ms = random_quadruplet_patterns(6, default_quadruplet_count(6), 200 + seed);
        Marginals y = measure(x, ms);
        SolverOutcome out = qaoa_solve(ms, y, small_qaoa(seed));
        found += out.position == x.spikes()[0].position;
    }
    EXPECT_GT(static_cast<double>(found) / seeds, 0.9);
}

TEST(detect_support, dispatch_agrees_on_exact_backends) {
    MeasurementSet ms = nearest_neighbor_patterns(6);
    std::mt19937_64 rng(7);
    Marginals r = oracle::random_residual(ms.size(), rng);
    SolverSpec brute{Backend::brute_force, {}};
    SolverSpec chain{Backend::chain_dp, {}};
    EXPECT_NEAR(detect_support(brute, ms, r).score, detect_support(chain, ms, r).score, 1e-12);
}
