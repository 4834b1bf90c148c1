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

#ifndef QCS_HAMILTONIAN_H
#define QCS_HAMILTONIAN_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qcs/bit_index.h"
#include "qcs/measurement.h"

namespace qcs {

/// Merged coefficients smaller than this are dropped from a built Hamiltonian.
inline constexpr double kCoefficientCutoff = 1e-15;

/// coeff * prod_{j in support} Z_j. An empty support is the identity.
struct PauliTerm {
    std::vector<int> support;  // ascending qubit positions in [1, n]
    double coeff;

    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

/// A real diagonal operator written as a sum of Pauli-Z strings.
///
/// Spin convention: Z acting on bit value b has eigenvalue (1 - 2b), so
/// bit 0 maps to +1 and bit 1 to -1. Supports are stored as masks laid out
/// like BitIndex::value(), which makes a term's eigenvalue on z simply
/// (-1)^popcount(z & mask).
class IsingHamiltonian {
   public:
    explicit IsingHamiltonian(int num_qubits);

    int num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t num_terms() const noexcept {
        return terms_.size();
    }
    bool empty() const noexcept {
        return terms_.empty();
    }

    /// Adds coeff * Z_support, merging with an existing term of equal support.
    void add_term(std::span<const int> support, double coeff);
    void add_mask_term(std::uint64_t mask, double coeff);

    /// Coefficient of the given support (0 when absent).
    double coefficient(std::span<const int> support) const;

    /// Terms sorted by support size, then lexicographically by positions.
    std::vector<PauliTerm> terms() const;
    const std::map<std::uint64_t, double> &mask_terms() const noexcept {
        return terms_;
    }

    /// Largest support size present (0 for identity-only or empty).
    int max_order() const;

    void prune(double cutoff = kCoefficientCutoff);

    IsingHamiltonian operator-() const;
    IsingHamiltonian &operator+=(const IsingHamiltonian &other);
    friend IsingHamiltonian operator+(IsingHamiltonian a, const IsingHamiltonian &b) {
        a += b;
        return a;
    }

    std::vector<int> support_of(std::uint64_t mask) const;
    std::uint64_t mask_of(std::span<const int> support) const;

   private:
    int num_qubits_;
    std::map<std::uint64_t, double> terms_;
};

/// H = A^T r = sum_i r_i a_i with each pattern expanded over (I +/- Z)/2
/// factors: (I+Z)/2 for a bit fixed to 0, (I-Z)/2 for a bit fixed to 1.
IsingHamiltonian build_hamiltonian(const MeasurementSet &ms, const Marginals &r);

double evaluate(const IsingHamiltonian &h, const BitIndex &z);

/// h(z) for every z in [0, 2^n), by a fast Walsh-Hadamard transform of the
/// coefficient table. n is limited to kDenseBitLimit.
std::vector<double> diagonal(const IsingHamiltonian &h);

/// One line per term, "coeff  Z1 Z3 ...", identity rendered as "I".
std::string dump(const IsingHamiltonian &h);

}  // namespace qcs

#endif
