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

#include "qcs/hamiltonian.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "qcs/error.h"

using namespace qcs;

namespace {

// Pauli coefficient of support S from a dense diagonal:
// c_S = 2^-n sum_z d(z) prod_{j in S} (1 - 2 b_j(z)).
double projected_coefficient(const oracle::Vector &d, const std::vector<int> &support, int n) {
    double sum = 0.0;
    for (Eigen::Index z = 0; z < d.size(); z++) {
        double sign = 1.0;
        for (int j : support) {
            sign *= 1.0 - 2.0 * oracle::bit_of(static_cast<std::uint64_t>(z), j, n);
        }
        sum += sign * d(z);
    }
    return sum / static_cast<double>(d.size());
}

}  // namespace

TEST(build_hamiltonian, single_bit_fixed_to_one) {
    MeasurementSet ms(3, {Pattern({{1, 1}})});
    Marginals r{{1.0}};
    oracle::Vector d = oracle::kronecker_diagonal(ms, r);
    EXPECT_DOUBLE_EQ(projected_coefficient(d, {}, 3), 0.5);
    EXPECT_DOUBLE_EQ(projected_coefficient(d, {1}, 3), -0.5);

    IsingHamiltonian h = build_hamiltonian(ms, r);
    std::vector<PauliTerm> expected{{{}, 0.5}, {{1}, -0.5}};
    EXPECT_EQ(h.terms(), expected);
}

TEST(build_hamiltonian, pair_fixed_to_zero) {
    MeasurementSet ms(2, {Pattern({{1, 0}, {2, 0}})});
    Marginals r{{1.0}};
    oracle::Vector d = oracle::kronecker_diagonal(ms, r);
    for (auto support : std::vector<std::vector<int>>{{}, {1}, {2}, {1, 2}}) {
        EXPECT_DOUBLE_EQ(projected_coefficient(d, support, 2), 0.25);
    }
    IsingHamiltonian h = build_hamiltonian(ms, r);
    std::vector<PauliTerm> expected{{{}, 0.25}, {{1}, 0.25}, {{2}, 0.25}, {{1, 2}, 0.25}};
    EXPECT_EQ(h.terms(), expected);
}

TEST(build_hamiltonian, zero_residual_is_empty) {
    MeasurementSet ms = nearest_neighbor_patterns(5);
    EXPECT_TRUE(build_hamiltonian(ms, Marginals{std::vector<double>(ms.size(), 0.0)}).empty());
}

TEST(build_hamiltonian, shape_mismatch) {
    EXPECT_THROW(build_hamiltonian(nearest_neighbor_patterns(3), Marginals{{1.0}}), Error);
}

TEST(build_hamiltonian, complete_groups_cancel) {
    // A full value table over a pair sums to the identity.
    MeasurementSet ms = nearest_neighbor_patterns(2);
    IsingHamiltonian h = build_hamiltonian(ms, Marginals{{1.0, 1.0, 1.0, 1.0}});
    std::vector<PauliTerm> expected{{{}, 1.0}};
    EXPECT_EQ(h.terms(), expected);
}

TEST(evaluate, identity_and_single_z) {
    IsingHamiltonian c(4);
    c.add_term(std::vector<int>{}, 2.5);
    for (std::uint64_t z = 0; z < 16; z++) {
        EXPECT_EQ(evaluate(c, BitIndex(z, 4)), 2.5);
    }
    IsingHamiltonian z1(3);
    z1.add_term(std::vector<int>{1}, 1.0);
    EXPECT_EQ(evaluate(z1, BitIndex::parse("011")), 1.0);
    EXPECT_EQ(evaluate(z1, BitIndex::parse("100")), -1.0);
}

TEST(evaluate, matches_column_dot_and_kronecker_oracle) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; trial++) {
        int n = 1 + trial % 10;
        MeasurementSet ms = oracle::random_patterns(n, 1 + trial % 11, rng);
        Marginals r = oracle::random_residual(ms.size(), rng);
        IsingHamiltonian h = build_hamiltonian(ms, r);
        oracle::Vector d = oracle::kronecker_diagonal(ms, r);
        std::vector<double> fast = diagonal(h);
        double scale = 0.0;
        for (double v : r.values) {
            scale += std::abs(v);
        }
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); z++) {
            BitIndex idx(z, n);
            double expected = column_dot(idx, r, ms);
            EXPECT_NEAR(evaluate(h, idx), expected, 1e-12 * std::max(scale, 1.0));
            EXPECT_NEAR(d(static_cast<Eigen::Index>(z)), expected, 1e-12 * std::max(scale, 1.0));
            EXPECT_NEAR(fast[z], expected, 1e-12 * std::max(scale, 1.0));
        }
    }
}

TEST(structure, nearest_neighbor_is_a_chain) {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 10; n++) {
        MeasurementSet ms = nearest_neighbor_patterns(n);
        IsingHamiltonian h = build_hamiltonian(ms, oracle::random_residual(ms.size(), rng));
        EXPECT_LE(h.max_order(), 2);
        for (const auto &t : h.terms()) {
            if (t.support.size() == 2) {
                EXPECT_EQ(t.support[1], t.support[0] + 1);
            }
        }
    }
}

TEST(structure, quadruplets_are_four_body_and_nonlocal) {
    MeasurementSet ms = random_quadruplet_patterns(8, 6, 12);
    std::mt19937_64 rng(1);
    IsingHamiltonian h = build_hamiltonian(ms, oracle::random_residual(ms.size(), rng));
    EXPECT_EQ(h.max_order(), 4);
    bool nonlocal = false;
    for (const auto &t : h.terms()) {
        for (std::size_t j = 0; j + 1 < t.support.size(); j++) {
            nonlocal = nonlocal || t.support[j + 1] != t.support[j] + 1;
        }
    }
    EXPECT_TRUE(nonlocal);
    EXPECT_LE(h.num_terms(), ms.size() * 16);
}

TEST(structure, merging_is_additive) {
    std::mt19937_64 rng(31);
    MeasurementSet a = oracle::random_patterns(6, 7, rng);
    MeasurementSet b = oracle::random_patterns(6, 5, rng);
    Marginals ra = oracle::random_residual(a.size(), rng);
    Marginals rb = oracle::random_residual(b.size(), rng);

    std::vector<Pattern> both = a.patterns();
    both.insert(both.end(), b.patterns().begin(), b.patterns().end());
    Marginals rab = ra;
    rab.values.insert(rab.values.end(), rb.values.begin(), rb.values.end());

    IsingHamiltonian joined = build_hamiltonian(MeasurementSet(6, both), rab);
    IsingHamiltonian summed = build_hamiltonian(a, ra) + build_hamiltonian(b, rb);
    for (std::uint64_t z = 0; z < 64; z++) {
        EXPECT_NEAR(evaluate(joined, BitIndex(z, 6)), evaluate(summed, BitIndex(z, 6)), 1e-12);
    }
    for (const auto &t : joined.terms()) {
        EXPECT_NEAR(t.coeff, summed.coefficient(t.support), 1e-12);
    }
}

TEST(dump, sorted_lines) {
    MeasurementSet ms(2, {Pattern({{1, 0}, {2, 1}})});
    std::string text = dump(build_hamiltonian(ms, Marginals{{1.0}}));
    EXPECT_EQ(text, "0.25  I\n0.25  Z1\n-0.25  Z2\n-0.25  Z1 Z2\n");
}

TEST(hamiltonian, rejects_bad_support) {
    IsingHamiltonian h(3);
    EXPECT_THROW(h.add_term(std::vector<int>{4}, 1.0), Error);
    EXPECT_THROW(h.add_term(std::vector<int>{2, 2}, 1.0), Error);
}
