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

#ifndef QCS_SIGNAL_H
#define QCS_SIGNAL_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcs/bit_index.h"

namespace qcs {

/// Dense materialization is refused above this many bits.
inline constexpr int kDenseBitLimit = 20;

struct Spike {
    BitIndex position;
    double value;

    friend bool operator==(const Spike &, const Spike &) = default;
};

/// A vector over the 2^n index space holding a handful of nonzero entries.
///
/// Positions are pairwise distinct and values nonzero. The spike list may be
/// empty (e.g. the reconstruction of an all-zero measurement).
class SparseSignal {
   public:
    SparseSignal(int num_bits, std::vector<Spike> spikes);

    int num_bits() const noexcept {
        return num_bits_;
    }
    std::size_t sparsity() const noexcept {
        return spikes_.size();
    }
    const std::vector<Spike> &spikes() const noexcept {
        return spikes_;
    }
    std::optional<double> value_at(std::uint64_t position) const;
    bool contains(std::uint64_t position) const {
        return value_at(position).has_value();
    }

    friend bool operator==(const SparseSignal &, const SparseSignal &) = default;

   private:
    int num_bits_;
    std::vector<Spike> spikes_;
};

/// Half-open amplitude interval (low, high]; both ends positive.
struct ValueRange {
    double low = 0.1;
    double high = 1.0;
};

/// Draws `sparsity` distinct positions uniformly without replacement and a
/// uniform amplitude in `range` for each. Spikes are returned sorted by
/// position. Deterministic for a fixed seed.
SparseSignal random_sparse_signal(int num_bits, std::size_t sparsity, ValueRange range, std::uint64_t seed);

std::vector<double> dense_vector(const SparseSignal &signal);

/// Inverse of dense_vector: keeps every nonzero entry as a spike.
SparseSignal sparsify(int num_bits, std::span<const double> dense);

}  // namespace qcs

#endif
