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

#include "qcs/measurement.h"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.h"
#include "qcs/error.h"

using namespace qcs;

namespace {

// Independent census: for every adjacent pair enumerate its value table.
std::size_t nn_census(int n) {
    std::size_t count = 0;
    for (int i = 1; i + 1 <= n; i++) {
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                count++;
            }
        }
    }
    return count;
}

}  // namespace

TEST(nearest_neighbor, pattern_count) {
    EXPECT_EQ(nn_census(6), 20u);
    EXPECT_EQ(nearest_neighbor_patterns(6).size(), 20u);
    for (int n = 2; n <= 12; n++) {
        EXPECT_EQ(nearest_neighbor_patterns(n).size(), nn_census(n));
    }
}

TEST(nearest_neighbor, two_bits_gives_full_table) {
    MeasurementSet ms = nearest_neighbor_patterns(2);
    ASSERT_EQ(ms.size(), 4u);
    for (int combo = 0; combo < 4; combo++) {
        std::vector<BitConstraint> expected{{1, combo >> 1}, {2, combo & 1}};
        EXPECT_EQ(ms[combo].constraints(), expected);
    }
}

TEST(nearest_neighbor, every_index_matches_n_minus_one_patterns) {
    for (int n = 2; n <= 8; n++) {
        MeasurementSet ms = nearest_neighbor_patterns(n);
        oracle::Matrix a = oracle::dense_matrix(ms);
        for (Eigen::Index z = 0; z < a.cols(); z++) {
            EXPECT_EQ(a.col(z).sum(), n - 1);
        }
    }
}

TEST(nearest_neighbor, invalid_size) {
    try {
        nearest_neighbor_patterns(1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_size);
    }
}

TEST(quadruplets, sixteen_rows_per_quadruplet) {
    MeasurementSet ms = random_quadruplet_patterns(6, 2, 11);
    EXPECT_EQ(ms.size(), 32u);
    std::set<std::vector<int>> quads;
    for (const auto &p : ms.patterns()) {
        ASSERT_EQ(p.order(), 4u);
        std::vector<int> bits;
        for (const auto &c : p.constraints()) {
            bits.push_back(c.bit);
        }
        EXPECT_EQ(std::set<int>(bits.begin(), bits.end()).size(), 4u);
        quads.insert(bits);
    }
    EXPECT_EQ(quads.size(), 2u);
}

TEST(quadruplets, four_bits_is_the_joint_distribution) {
    MeasurementSet ms = random_quadruplet_patterns(4, 1, 3);
    oracle::Matrix a = oracle::dense_matrix(ms);
    for (Eigen::Index z = 0; z < a.cols(); z++) {
        EXPECT_EQ(a.col(z).sum(), 1.0);
    }
}

TEST(quadruplets, deterministic_and_exhaustion) {
    EXPECT_EQ(random_quadruplet_patterns(8, 5, 42), random_quadruplet_patterns(8, 5, 42));
    EXPECT_EQ(random_quadruplet_patterns(6, 15, 1).size(), 240u);
    try {
        random_quadruplet_patterns(6, 16, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::exhaustion);
    }
    EXPECT_THROW(random_quadruplet_patterns(3, 1, 1), Error);
}

TEST(quadruplets, default_count) {
    EXPECT_EQ(default_quadruplet_count(6), 3u);
    EXPECT_EQ(default_quadruplet_count(4), 2u);
}

TEST(pattern_matches, basic_cases) {
    Pattern empty;
    for (std::uint64_t z = 0; z < 64; z++) {
        EXPECT_TRUE(pattern_matches(empty, BitIndex(z, 6)));
    }
    Pattern bit3({{3, 1}});
    EXPECT_TRUE(pattern_matches(bit3, BitIndex::parse("001000")));
    EXPECT_FALSE(pattern_matches(bit3, BitIndex::parse("110111")));

    Pattern point({{1, 1}, {2, 0}, {3, 1}, {4, 1}});
    int hits = 0;
    for (std::uint64_t z = 0; z < 16; z++) {
        hits += pattern_matches(point, BitIndex(z, 4));
    }
    EXPECT_EQ(hits, 1);
}

TEST(pattern, rejects_bad_constraints) {
    EXPECT_THROW(Pattern({{1, 0}, {1, 1}}), Error);
    EXPECT_THROW(Pattern({{0, 0}}), Error);
    EXPECT_THROW(Pattern({{1, 2}}), Error);
    EXPECT_THROW(MeasurementSet(3, {Pattern({{4, 0}})}), Error);
    EXPECT_THROW(MeasurementSet(3, {}), Error);
}

TEST(measure, single_spike) {
    SparseSignal x(6, {{BitIndex(0, 6), 1.0}});
    MeasurementSet ms(6, {Pattern({{1, 0}, {2, 0}}), Pattern({{1, 1}, {2, 0}})});
    Marginals y = measure(x, ms);
    EXPECT_EQ(y.values[0], 1.0);
    EXPECT_EQ(y.values[1], 0.0);
}

TEST(measure, shape_error) {
    SparseSignal x(5, {{BitIndex(0, 5), 1.0}});
    try {
        measure(x, nearest_neighbor_patterns(6));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::shape);
    }
}

TEST(measure, equals_dense_product) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; trial++) {
        int n = 2 + trial % 9;
        MeasurementSet ms = oracle::random_patterns(n, 1 + trial % 13, rng);
        SparseSignal x = random_sparse_signal(n, 1 + trial % 4, {}, trial);
        oracle::Vector expected = oracle::dense_matrix(ms) * oracle::to_vector(dense_vector(x));
        Marginals y = measure(x, ms);
        for (std::size_t i = 0; i < ms.size(); i++) {
            EXPECT_NEAR(y.values[i], expected(static_cast<Eigen::Index>(i)), 1e-12);
        }
    }
}

TEST(measure, marginal_groups_are_complete) {
    for (std::uint64_t seed = 0; seed < 30; seed++) {
        SparseSignal x = random_sparse_signal(7, 1 + seed % 5, {}, seed);
        double total = 0.0;
        for (const auto &s : x.spikes()) {
            total += s.value;
        }
        for (const MeasurementSet &ms : {nearest_neighbor_patterns(7), random_quadruplet_patterns(7, 4, seed)}) {
            Marginals y = measure(x, ms);
            std::map<std::vector<int>, double> groups;
            for (std::size_t i = 0; i < ms.size(); i++) {
                std::vector<int> bits;
                for (const auto &c : ms[i].constraints()) {
                    bits.push_back(c.bit);
                }
                groups[bits] += y.values[i];
            }
            for (const auto &[bits, sum] : groups) {
                EXPECT_NEAR(sum, total, 1e-12);
            }
        }
    }
}

TEST(column_dot, zero_residual) {
    MeasurementSet ms = nearest_neighbor_patterns(5);
    Marginals r{std::vector<double>(ms.size(), 0.0)};
    for (std::uint64_t z = 0; z < 32; z++) {
        EXPECT_EQ(column_dot(BitIndex(z, 5), r, ms), 0.0);
    }
}

TEST(column_dot, nearest_neighbor_ones) {
    for (int n = 2; n <= 9; n++) {
        MeasurementSet ms = nearest_neighbor_patterns(n);
        Marginals ones{std::vector<double>(ms.size(), 1.0)};
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); z++) {
            EXPECT_EQ(column_dot(BitIndex(z, n), ones, ms), n - 1);
        }
    }
}

TEST(column_dot, equals_dense_transpose_product) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; trial++) {
        int n = 1 + trial % 10;
        MeasurementSet ms = oracle::random_patterns(n, 1 + trial % 17, rng);
        Marginals r = oracle::random_residual(ms.size(), rng);
        oracle::Vector expected = oracle::dense_matrix(ms).transpose() * oracle::to_vector(r.values);
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); z++) {
            EXPECT_NEAR(column_dot(BitIndex(z, n), r, ms), expected(static_cast<Eigen::Index>(z)), 1e-12);
        }
    }
}

TEST(column_dot, nonnegative_for_nonnegative_signals) {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        SparseSignal x = random_sparse_signal(6, 3, {}, seed);
        MeasurementSet ms = random_quadruplet_patterns(6, 3, seed);
        Marginals y = measure(x, ms);
        for (std::uint64_t z = 0; z < 64; z++) {
            EXPECT_GE(column_dot(BitIndex(z, 6), y, ms), 0.0);
        }
    }
}

TEST(column_norm_sq, structured_sets) {
    MeasurementSet nn = nearest_neighbor_patterns(7);
    MeasurementSet quad = random_quadruplet_patterns(7, 5, 3);
    MeasurementSet single(7, {Pattern()});
    for (std::uint64_t z = 0; z < 128; z++) {
        EXPECT_EQ(column_norm_sq(BitIndex(z, 7), nn), 6.0);
        EXPECT_EQ(column_norm_sq(BitIndex(z, 7), quad), 5.0);
        EXPECT_EQ(column_norm_sq(BitIndex(z, 7), single), 1.0);
    }
    MeasurementSet narrow(3, {Pattern({{1, 1}})});
    EXPECT_EQ(column_norm_sq(BitIndex(0, 3), narrow), 0.0);
}

TEST(full_joint, identity_matrix) {
    MeasurementSet ms = full_joint_patterns(4);
    oracle::Matrix a = oracle::dense_matrix(ms);
    EXPECT_TRUE(a.isIdentity());
    EXPECT_THROW(full_joint_patterns(17), Error);
}
