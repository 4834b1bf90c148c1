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

#include "qcs/signal.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>

#include "qcs/error.h"

namespace qcs {

SparseSignal::SparseSignal(int num_bits, std::vector<Spike> spikes) : num_bits_(num_bits), spikes_(std::move(spikes)) {
    if (num_bits < 1 || num_bits > kMaxBits) {
        fail(ErrorKind::invalid_size, "signal bit count " + std::to_string(num_bits) + " outside [1, 62]");
    }
    std::unordered_set<std::uint64_t> seen;
    for (const auto &spike : spikes_) {
        if (spike.position.num_bits() != num_bits) {
            fail(ErrorKind::shape, "spike position width differs from signal bit count");
        }
        if (spike.value == 0.0 || !std::isfinite(spike.value)) {
            fail(ErrorKind::invalid_argument, "spike values must be finite and nonzero");
        }
        if (!seen.insert(spike.position.value()).second) {
            fail(ErrorKind::invalid_argument, "duplicate spike position " + spike.position.str());
        }
    }
}

std::optional<double> SparseSignal::value_at(std::uint64_t position) const {
    for (const auto &spike : spikes_) {
        if (spike.position.value() == position) {
            return spike.value;
        }
    }
    return std::nullopt;
}

SparseSignal random_sparse_signal(int num_bits, std::size_t sparsity, ValueRange range, std::uint64_t seed) {
    if (num_bits < 1 || num_bits > kMaxBits) {
        fail(ErrorKind::invalid_size, "bit count " + std::to_string(num_bits) + " outside [1, 62]");
    }
    const std::uint64_t dim = index_space_size(num_bits);
    if (sparsity < 1 || sparsity > dim) {
        fail(ErrorKind::invalid_sparsity,
             "sparsity " + std::to_string(sparsity) + " outside [1, " + std::to_string(dim) + "]");
    }
    if (!(range.low >= 0.0) || !(range.high > range.low)) {
        fail(ErrorKind::invalid_argument, "value range must satisfy 0 <= low < high");
    }

    std::mt19937_64 rng(seed);

    // Floyd's sampling: s distinct values from [0, dim) in O(s) draws.
    std::unordered_set<std::uint64_t> chosen;
    for (std::uint64_t j = dim - sparsity; j < dim; j++) {
        std::uniform_int_distribution<std::uint64_t> pick(0, j);
        std::uint64_t t = pick(rng);
        if (!chosen.insert(t).second) {
            chosen.insert(j);
        }
    }
    std::vector<std::uint64_t> positions(chosen.begin(), chosen.end());
    std::sort(positions.begin(), positions.end());

    // uniform_real_distribution covers [low, high); reflect to (low, high].
    std::uniform_real_distribution<double> amplitude(range.low, range.high);
    std::vector<Spike> spikes;
    spikes.reserve(sparsity);
    for (auto p : positions) {
        double v = range.high + range.low - amplitude(rng);
        spikes.push_back(Spike{BitIndex(p, num_bits), v});
    }
    return SparseSignal(num_bits, std::move(spikes));
}

std::vector<double> dense_vector(const SparseSignal &signal) {
    if (signal.num_bits() > kDenseBitLimit) {
        fail(ErrorKind::capacity, "dense vector refused for n = " + std::to_string(signal.num_bits()));
    }
    std::vector<double> out(index_space_size(signal.num_bits()), 0.0);
    for (const auto &spike : signal.spikes()) {
        out[spike.position.value()] = spike.value;
    }
    return out;
}

SparseSignal sparsify(int num_bits, std::span<const double> dense) {
    if (num_bits < 1 || num_bits > kDenseBitLimit || dense.size() != index_space_size(num_bits)) {
        fail(ErrorKind::shape, "dense vector length must be 2^n with n <= 20");
    }
    std::vector<Spike> spikes;
    for (std::size_t i = 0; i < dense.size(); i++) {
        if (dense[i] != 0.0) {
            spikes.push_back(Spike{BitIndex(i, num_bits), dense[i]});
        }
    }
    return SparseSignal(num_bits, std::move(spikes));
}

}  // namespace qcs
