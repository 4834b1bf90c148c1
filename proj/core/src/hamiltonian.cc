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

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "qcs/error.h"
#include "qcs/signal.h"

namespace qcs {

IsingHamiltonian::IsingHamiltonian(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxBits) {
        fail(ErrorKind::invalid_size, "qubit count " + std::to_string(num_qubits) + " outside [1, 62]");
    }
}

std::uint64_t IsingHamiltonian::mask_of(std::span<const int> support) const {
    std::uint64_t mask = 0;
    for (int q : support) {
        if (q < 1 || q > num_qubits_) {
            fail(ErrorKind::bad_qubit, "qubit " + std::to_string(q) + " outside [1, " + std::to_string(num_qubits_) + "]");
        }
        std::uint64_t bit = position_mask(q, num_qubits_);
        if (mask & bit) {
            fail(ErrorKind::invalid_argument, "qubit " + std::to_string(q) + " repeated in support");
        }
        mask |= bit;
    }
    return mask;
}

std::vector<int> IsingHamiltonian::support_of(std::uint64_t mask) const {
    std::vector<int> out;
    for (int q = 1; q <= num_qubits_; q++) {
        if (mask & position_mask(q, num_qubits_)) {
            out.push_back(q);
        }
    }
    return out;
}

void IsingHamiltonian::add_term(std::span<const int> support, double coeff) {
    add_mask_term(mask_of(support), coeff);
}

void IsingHamiltonian::add_mask_term(std::uint64_t mask, double coeff) {
    if (!std::isfinite(coeff)) {
        fail(ErrorKind::invalid_argument, "non-finite Pauli coefficient");
    }
    if (mask >= index_space_size(num_qubits_)) {
        fail(ErrorKind::bad_qubit, "support mask exceeds qubit count");
    }
    terms_[mask] += coeff;
}

double IsingHamiltonian::coefficient(std::span<const int> support) const {
    auto it = terms_.find(mask_of(support));
    return it == terms_.end() ? 0.0 : it->second;
}

std::vector<PauliTerm> IsingHamiltonian::terms() const {
    std::vector<PauliTerm> out;
    out.reserve(terms_.size());
    for (const auto &[mask, coeff] : terms_) {
        out.push_back(PauliTerm{support_of(mask), coeff});
    }
    std::sort(out.begin(), out.end(), [](const PauliTerm &a, const PauliTerm &b) {
        if (a.support.size() != b.support.size()) {
            return a.support.size() < b.support.size();
        }
        return a.support < b.support;
    });
    return out;
}

int IsingHamiltonian::max_order() const {
    int m = 0;
    for (const auto &[mask, coeff] : terms_) {
        m = std::max(m, std::popcount(mask));
    }
    return m;
}

void IsingHamiltonian::prune(double cutoff) {
    std::erase_if(terms_, [&](const auto &kv) { return std::abs(kv.second) < cutoff; });
}

IsingHamiltonian IsingHamiltonian::operator-() const {
    IsingHamiltonian out = *this;
    for (auto &[mask, coeff] : out.terms_) {
        coeff = -coeff;
    }
    return out;
}

IsingHamiltonian &IsingHamiltonian::operator+=(const IsingHamiltonian &other) {
    if (other.num_qubits_ != num_qubits_) {
        fail(ErrorKind::shape, "cannot add Hamiltonians over different qubit counts");
    }
    for (const auto &[mask, coeff] : other.terms_) {
        terms_[mask] += coeff;
    }
    return *this;
}

IsingHamiltonian build_hamiltonian(const MeasurementSet &ms, const Marginals &r) {
    if (r.size() != ms.size()) {
        fail(ErrorKind::shape, "marginals length " + std::to_string(r.size()) + " differs from pattern count " +
                                   std::to_string(ms.size()));
    }
    const int n = ms.num_bits();
    IsingHamiltonian h(n);
    std::vector<std::uint64_t> bits;
    std::vector<double> signs;
    for (std::size_t i = 0; i < ms.size(); i++) {
        double weight = r.values[i];
        if (weight == 0.0) {
            continue;
        }
        const auto &cs = ms[i].constraints();
        const std::size_t k = cs.size();
        bits.clear();
        signs.clear();
        for (const auto &c : cs) {
            bits.push_back(position_mask(c.bit, n));
            signs.push_back(c.value ? -1.0 : 1.0);
        }
        // prod_j (I + s_j Z_j) / 2 expands to sum over subsets S of
        // 2^-k prod_{j in S} s_j Z_S.
        const double scale = weight / static_cast<double>(std::uint64_t{1} << k);
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << k); subset++) {
            std::uint64_t mask = 0;
            double sign = 1.0;
            for (std::size_t j = 0; j < k; j++) {
                if (subset & (std::uint64_t{1} << j)) {
                    mask |= bits[j];
                    sign *= signs[j];
                }
            }
            h.add_mask_term(mask, sign * scale);
        }
    }
    h.prune();
    return h;
}

double evaluate(const IsingHamiltonian &h, const BitIndex &z) {
    if (z.num_bits() != h.num_qubits()) {
        fail(ErrorKind::shape, "index width differs from qubit count");
    }
    double sum = 0.0;
    for (const auto &[mask, coeff] : h.mask_terms()) {
        sum += (std::popcount(z.value() & mask) & 1) ? -coeff : coeff;
    }
    return sum;
}

std::vector<double> diagonal(const IsingHamiltonian &h) {
    if (h.num_qubits() > kDenseBitLimit) {
        fail(ErrorKind::capacity, "diagonal refused for n = " + std::to_string(h.num_qubits()));
    }
    const std::size_t dim = index_space_size(h.num_qubits());
    std::vector<double> table(dim, 0.0);
    for (const auto &[mask, coeff] : h.mask_terms()) {
        table[mask] = coeff;
    }
    // In-place Walsh-Hadamard: table[z] <- sum_S c_S (-1)^{|z & S|}.
    for (std::size_t len = 1; len < dim; len <<= 1) {
        for (std::size_t base = 0; base < dim; base += len << 1) {
            for (std::size_t j = base; j < base + len; j++) {
                double a = table[j];
                double b = table[j + len];
                table[j] = a + b;
                table[j + len] = a - b;
            }
        }
    }
    return table;
}

std::string dump(const IsingHamiltonian &h) {
    std::ostringstream out;
    out << std::setprecision(17);
    for (const auto &term : h.terms()) {
        out << term.coeff << " ";
        if (term.support.empty()) {
            out << " I";
        }
        for (int q : term.support) {
            out << " Z" << q;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qcs
