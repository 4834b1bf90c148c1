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

#include "qcs/bit_index.h"

#include <vector>

#include "qcs/error.h"

namespace qcs {

BitIndex::BitIndex(std::uint64_t value, int num_bits) : value_(value), num_bits_(num_bits) {
    if (num_bits < 1 || num_bits > kMaxBits) {
        fail(ErrorKind::invalid_size, "bit count " + std::to_string(num_bits) + " outside [1, 62]");
    }
    if (value >= index_space_size(num_bits)) {
        fail(ErrorKind::invalid_size,
             "index " + std::to_string(value) + " does not fit in " + std::to_string(num_bits) + " bits");
    }
}

BitIndex BitIndex::from_bits(std::span<const int> bits) {
    std::uint64_t value = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            fail(ErrorKind::invalid_argument, "bit values must be 0 or 1");
        }
        value = (value << 1) | static_cast<std::uint64_t>(b);
    }
    return BitIndex(value, static_cast<int>(bits.size()));
}

BitIndex BitIndex::parse(const std::string &text) {
    std::vector<int> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            fail(ErrorKind::parse, "bit string may only contain '0' and '1': " + text);
        }
        bits.push_back(c - '0');
    }
    return from_bits(bits);
}

int BitIndex::bit(int position) const {
    if (position < 1 || position > num_bits_) {
        fail(ErrorKind::bad_qubit, "bit position " + std::to_string(position) + " outside [1, n]");
    }
    return (value_ & position_mask(position, num_bits_)) ? 1 : 0;
}

std::string BitIndex::str() const {
    std::string out;
    out.reserve(num_bits_);
    for (int j = 1; j <= num_bits_; j++) {
        out.push_back(bit(j) ? '1' : '0');
    }
    return out;
}

}  // namespace qcs
