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

#ifndef QCS_SOLVERS_H
#define QCS_SOLVERS_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qcs/bit_index.h"
#include "qcs/hamiltonian.h"
#include "qcs/measurement.h"

namespace qcs {

/// Exhaustive search is refused above this many bits.
inline constexpr int kBruteForceBitLimit = 20;

/// Result of one support-detection step: the chosen index and |(A^T r)_z|
/// recomputed by column_dot at that index.
struct SolverOutcome {
    BitIndex position;
    double score;
    std::map<std::string, double> diagnostics;
};

enum class Backend { brute_force, chain_dp, qaoa };

std::string_view to_string(Backend backend);
/// Accepts "brute", "chain", "qaoa" (and the long enum names).
Backend parse_backend(std::string_view name);

struct QaoaSolverConfig {
    std::size_t depth = 1;
    std::size_t restarts = 10;
    int max_evaluations = 200;
    std::size_t shots = 1024;
    std::uint64_t seed = 0;
};

struct SolverSpec {
    Backend backend = Backend::brute_force;
    QaoaSolverConfig qaoa;
};

SolverOutcome brute_force_solve(const MeasurementSet &ms, const Marginals &r);

/// Fields and couplings of a chain-structured Hamiltonian:
/// h(z) = offset + sum_j field[j] s_j + sum_j coupling[j] s_j s_{j+1},
/// s_j = 1 - 2 b_j, with 0-based vectors (field has n entries, coupling n-1).
struct ChainModel {
    double offset = 0.0;
    std::vector<double> field;
    std::vector<double> coupling;
};

/// Fails with ErrorKind::structure if any term is not {}, {i} or {i, i+1}.
ChainModel extract_chain(const IsingHamiltonian &h);

struct ChainExtremum {
    BitIndex position;
    double value;
};

/// Exact max (or min) of a chain model by dynamic programming; among optimal
/// configurations the smallest index is returned.
ChainExtremum chain_extremum(const ChainModel &chain, bool maximize);

SolverOutcome chain_dp_solve(const MeasurementSet &ms, const Marginals &r);

/// Approximate search: optimizes QAOA for H and for -H, samples `shots`
/// candidates from each optimized state and returns the pooled candidate with
/// the largest |column_dot| (smallest index on ties).
SolverOutcome qaoa_solve(const MeasurementSet &ms, const Marginals &r, const QaoaSolverConfig &config);

/// Dispatches to the selected backend. `stream` decorrelates the QAOA seed
/// between calls (e.g. pursuit iterations) while keeping runs reproducible.
SolverOutcome detect_support(const SolverSpec &spec, const MeasurementSet &ms, const Marginals &r,
                             std::uint64_t stream = 0);

}  // namespace qcs

#endif
