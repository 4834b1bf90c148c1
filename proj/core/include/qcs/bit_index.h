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

#ifndef QCS_BIT_INDEX_H
#define QCS_BIT_INDEX_H

#include <compare>
#include <cstdint>
#include <span>
#include <string>

namespace qcs {

/// Largest supported bit count for index spaces. Keeps 2^n representable
/// and every position mask a valid shift.
inline constexpr int kMaxBits = 62;

/// Mask selecting bit `position` (1-based) of an n-bit index.
///
/// Bit 1 is the most significant: the string b_1 b_2 ... b_n reads as the
/// binary integer with b_1 in the 2^(n-1) place.
constexpr std::uint64_t position_mask(int position, int num_bits) {
    return std::uint64_t{1} << (num_bits - position);
}

constexpr std::uint64_t index_space_size(int num_bits) {
    return std::uint64_t{1} << num_bits;
}

/// An n-bit index into a 2^n dimensional space.
class BitIndex {
   public:
    BitIndex(std::uint64_t value, int num_bits);

    /// Builds from bits listed b_1 first.
    static BitIndex from_bits(std::span<const int> bits);
    /// Parses a string of '0'/'1' characters, b_1 first.
    static BitIndex parse(const std::string &text);

    std::uint64_t value() const noexcept {
        return value_;
    }
    int num_bits() const noexcept {
        return num_bits_;
    }
    /// Value (0 or 1) of bit `position` in [1, n].
    int bit(int position) const;
    std::string str() const;

    friend bool operator==(const BitIndex &, const BitIndex &) = default;
    friend auto operator<=>(const BitIndex &, const BitIndex &) = default;

   private:
    std::uint64_t value_;
    int num_bits_;
};

}  // namespace qcs

#endif
