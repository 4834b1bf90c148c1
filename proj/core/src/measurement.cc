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

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>

#include "qcs/error.h"

namespace qcs {

namespace {

void check_index(const BitIndex &z, const MeasurementSet &ms) {
    if (z.num_bits() != ms.num_bits()) {
        fail(ErrorKind::shape, "index has " + std::to_string(z.num_bits()) + " bits, measurement set has " +
                                   std::to_string(ms.num_bits()));
    }
}

void check_residual(const Marginals &r, const MeasurementSet &ms) {
    if (r.size() != ms.size()) {
        fail(ErrorKind::shape, "marginals length " + std::to_string(r.size()) + " differs from pattern count " +
                                   std::to_string(ms.size()));
    }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; i++) {
        result = result * (n - k + i) / i;
    }
    return result;
}

}  // namespace

Pattern::Pattern(std::vector<BitConstraint> constraints) : constraints_(std::move(constraints)) {
    std::unordered_set<int> seen;
    for (const auto &c : constraints_) {
        if (c.bit < 1 || c.bit > kMaxBits) {
            fail(ErrorKind::invalid_argument, "constraint bit " + std::to_string(c.bit) + " out of range");
        }
        if (c.value != 0 && c.value != 1) {
            fail(ErrorKind::invalid_argument, "constraint value must be 0 or 1");
        }
        if (!seen.insert(c.bit).second) {
            fail(ErrorKind::invalid_argument, "bit " + std::to_string(c.bit) + " constrained twice");
        }
    }
}

int Pattern::max_bit() const noexcept {
    int m = 0;
    for (const auto &c : constraints_) {
        m = std::max(m, c.bit);
    }
    return m;
}

std::uint64_t Pattern::care_mask(int num_bits) const {
    std::uint64_t mask = 0;
    for (const auto &c : constraints_) {
        mask |= position_mask(c.bit, num_bits);
    }
    return mask;
}

std::uint64_t Pattern::value_mask(int num_bits) const {
    std::uint64_t mask = 0;
    for (const auto &c : constraints_) {
        if (c.value) {
            mask |= position_mask(c.bit, num_bits);
        }
    }
    return mask;
}

bool pattern_matches(const Pattern &pattern, const BitIndex &z) {
    for (const auto &c : pattern.constraints()) {
        if (z.bit(c.bit) != c.value) {
            return false;
        }
    }
    return true;
}

MeasurementSet::MeasurementSet(int num_bits, std::vector<Pattern> patterns)
    : num_bits_(num_bits), patterns_(std::move(patterns)) {
    if (num_bits < 1 || num_bits > kMaxBits) {
        fail(ErrorKind::invalid_size, "bit count " + std::to_string(num_bits) + " outside [1, 62]");
    }
    if (patterns_.empty()) {
        fail(ErrorKind::invalid_size, "a measurement set needs at least one pattern");
    }
    care_.reserve(patterns_.size());
    value_.reserve(patterns_.size());
    for (const auto &p : patterns_) {
        if (p.max_bit() > num_bits) {
            fail(ErrorKind::shape, "pattern constrains bit " + std::to_string(p.max_bit()) + " of an " +
                                       std::to_string(num_bits) + "-bit index");
        }
        care_.push_back(p.care_mask(num_bits));
        value_.push_back(p.value_mask(num_bits));
    }
}

double Marginals::norm() const {
    double sum = 0.0;
    for (double v : values) {
        sum += v * v;
    }
    return std::sqrt(sum);
}

MeasurementSet nearest_neighbor_patterns(int num_bits) {
    if (num_bits < 2 || num_bits > kMaxBits) {
        fail(ErrorKind::invalid_size, "nearest-neighbor patterns need 2 <= n <= 62, got " + std::to_string(num_bits));
    }
    std::vector<Pattern> patterns;
    patterns.reserve(4 * (num_bits - 1));
    for (int i = 1; i < num_bits; i++) {
        for (int combo = 0; combo < 4; combo++) {
            patterns.emplace_back(std::vector<BitConstraint>{{i, combo >> 1}, {i + 1, combo & 1}});
        }
    }
    return MeasurementSet(num_bits, std::move(patterns));
}

std::size_t default_quadruplet_count(int num_bits) {
    std::size_t rows = 4 * static_cast<std::size_t>(std::max(num_bits - 1, 0));
    return (rows + 15) / 16 + 1;
}

MeasurementSet random_quadruplet_patterns(int num_bits, std::size_t count, std::uint64_t seed) {
    if (num_bits < 4 || num_bits > kMaxBits) {
        fail(ErrorKind::invalid_size, "quadruplet patterns need 4 <= n <= 62, got " + std::to_string(num_bits));
    }
    if (count < 1) {
        fail(ErrorKind::invalid_argument, "quadruplet count must be at least 1");
    }
    std::uint64_t available = binomial(static_cast<std::uint64_t>(num_bits), 4);
    if (count > available) {
        fail(ErrorKind::exhaustion, "requested " + std::to_string(count) + " quadruplets but only " +
                                        std::to_string(available) + " exist for n = " + std::to_string(num_bits));
    }

    std::vector<std::array<int, 4>> all;
    all.reserve(available);
    for (int a = 1; a <= num_bits; a++) {
        for (int b = a + 1; b <= num_bits; b++) {
            for (int c = b + 1; c <= num_bits; c++) {
                for (int d = c + 1; d <= num_bits; d++) {
                    all.push_back({a, b, c, d});
                }
            }
        }
    }

    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> picked;
    for (std::uint64_t j = available - count; j < available; j++) {
        std::uniform_int_distribution<std::uint64_t> pick(0, j);
        std::uint64_t t = pick(rng);
        if (!picked.insert(t).second) {
            picked.insert(j);
        }
    }
    std::vector<std::uint64_t> order(picked.begin(), picked.end());
    std::sort(order.begin(), order.end());

    std::vector<Pattern> patterns;
    patterns.reserve(16 * count);
    for (auto idx : order) {
        const auto &quad = all[idx];
        for (int combo = 0; combo < 16; combo++) {
            std::vector<BitConstraint> cs;
            for (int j = 0; j < 4; j++) {
                cs.push_back({quad[j], (combo >> (3 - j)) & 1});
            }
            patterns.emplace_back(std::move(cs));
        }
    }
    return MeasurementSet(num_bits, std::move(patterns));
}

MeasurementSet full_joint_patterns(int num_bits) {
    if (num_bits < 1 || num_bits > 16) {
        fail(ErrorKind::capacity, "full joint patterns limited to n <= 16, got " + std::to_string(num_bits));
    }
    std::vector<Pattern> patterns;
    patterns.reserve(index_space_size(num_bits));
    for (std::uint64_t z = 0; z < index_space_size(num_bits); z++) {
        std::vector<BitConstraint> cs;
        for (int j = 1; j <= num_bits; j++) {
            cs.push_back({j, (z & position_mask(j, num_bits)) ? 1 : 0});
        }
        patterns.emplace_back(std::move(cs));
    }
    return MeasurementSet(num_bits, std::move(patterns));
}

Marginals measure(const SparseSignal &signal, const MeasurementSet &ms) {
    if (signal.num_bits() != ms.num_bits()) {
        fail(ErrorKind::shape, "signal has " + std::to_string(signal.num_bits()) + " bits, patterns have " +
                                   std::to_string(ms.num_bits()));
    }
    Marginals y{std::vector<double>(ms.size(), 0.0)};
    for (std::size_t i = 0; i < ms.size(); i++) {
        for (const auto &spike : signal.spikes()) {
            if (ms.matches(i, spike.position.value())) {
                y.values[i] += spike.value;
            }
        }
    }
    return y;
}

double column_dot(const BitIndex &z, const Marginals &r, const MeasurementSet &ms) {
    check_index(z, ms);
    check_residual(r, ms);
    double sum = 0.0;
    for (std::size_t i = 0; i < ms.size(); i++) {
        if (ms.matches(i, z.value())) {
            sum += r.values[i];
        }
    }
    return sum;
}

double column_norm_sq(const BitIndex &z, const MeasurementSet &ms) {
    check_index(z, ms);
    std::size_t count = 0;
    for (std::size_t i = 0; i < ms.size(); i++) {
        count += ms.matches(i, z.value()) ? 1 : 0;
    }
    return static_cast<double>(count);
}

}  // namespace qcs
