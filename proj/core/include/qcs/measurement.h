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

#ifndef QCS_MEASUREMENT_H
#define QCS_MEASUREMENT_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcs/bit_index.h"
#include "qcs/signal.h"

namespace qcs {

struct BitConstraint {
    int bit;    // 1-based position, b_1 most significant
    int value;  // 0 or 1

    friend bool operator==(const BitConstraint &, const BitConstraint &) = default;
};

/// One binary measurement row: fixes some bits of the index to given values
/// and leaves the rest free. Entry (pattern, z) of the implicit measurement
/// matrix is 1 exactly when z satisfies every constraint.
class Pattern {
   public:
    Pattern() = default;
    explicit Pattern(std::vector<BitConstraint> constraints);

    const std::vector<BitConstraint> &constraints() const noexcept {
        return constraints_;
    }
    std::size_t order() const noexcept {
        return constraints_.size();
    }
    int max_bit() const noexcept;

    /// Bits of an n-bit index that this pattern constrains.
    std::uint64_t care_mask(int num_bits) const;
    /// Required values of the constrained bits, laid out like BitIndex::value().
    std::uint64_t value_mask(int num_bits) const;

    friend bool operator==(const Pattern &, const Pattern &) = default;

   private:
    std::vector<BitConstraint> constraints_;
};

bool pattern_matches(const Pattern &pattern, const BitIndex &z);

/// An ordered list of patterns over a common bit count; the rows of A.
class MeasurementSet {
   public:
    MeasurementSet(int num_bits, std::vector<Pattern> patterns);

    int num_bits() const noexcept {
        return num_bits_;
    }
    std::size_t size() const noexcept {
        return patterns_.size();
    }
    const std::vector<Pattern> &patterns() const noexcept {
        return patterns_;
    }
    const Pattern &operator[](std::size_t i) const {
        return patterns_[i];
    }

    /// A_{i,z} using precompiled masks; z must be an n-bit value.
    bool matches(std::size_t i, std::uint64_t z) const noexcept {
        return (z & care_[i]) == value_[i];
    }

    friend bool operator==(const MeasurementSet &a, const MeasurementSet &b) {
        return a.num_bits_ == b.num_bits_ && a.patterns_ == b.patterns_;
    }

   private:
    int num_bits_;
    std::vector<Pattern> patterns_;
    std::vector<std::uint64_t> care_;
    std::vector<std::uint64_t> value_;
};

/// Measurement outputs y = A x, one entry per pattern. Also used for residuals.
struct Marginals {
    std::vector<double> values;

    std::size_t size() const noexcept {
        return values.size();
    }
    double norm() const;

    friend bool operator==(const Marginals &, const Marginals &) = default;
};

/// All four value assignments of every adjacent pair (i, i+1): M = 4(n-1).
/// Ordered by pair index, then by the pair's value written as a 2-bit number.
MeasurementSet nearest_neighbor_patterns(int num_bits);

/// `count` distinct position quadruplets drawn uniformly, each expanded into
/// its 16 value assignments: M = 16 * count. Quadruplets are emitted in
/// lexicographic order.
MeasurementSet random_quadruplet_patterns(int num_bits, std::size_t count, std::uint64_t seed);

/// Quadruplet count giving roughly as many rows as the nearest-neighbor set.
std::size_t default_quadruplet_count(int num_bits);

/// Every pattern fixing all n bits: A is the identity on the 2^n space.
MeasurementSet full_joint_patterns(int num_bits);

Marginals measure(const SparseSignal &signal, const MeasurementSet &ms);

/// (A^T r)_z, computed without materializing A.
double column_dot(const BitIndex &z, const Marginals &r, const MeasurementSet &ms);

/// Squared norm of column z of A, i.e. the number of patterns z satisfies.
/// Zero means the column is absent.
double column_norm_sq(const BitIndex &z, const MeasurementSet &ms);

}  // namespace qcs

#endif
