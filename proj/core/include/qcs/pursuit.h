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

#ifndef QCS_PURSUIT_H
#define QCS_PURSUIT_H

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qcs/measurement.h"
#include "qcs/signal.h"
#include "qcs/solvers.h"

namespace qcs {

inline constexpr double kDefaultMinScore = 1e-9;
inline constexpr double kDefaultAmplitudeFloor = 1e-6;
inline constexpr double kDefaultRelativeTolerance = 1e-6;

struct PursuitConfig {
    std::size_t max_iterations = 1;
    double residual_tolerance = 0.0;  // absolute, on ||r||_2
    double min_score = kDefaultMinScore;
    SolverSpec solver;
    /// Checked between iterations; reaching it ends the run early.
    std::optional<std::chrono::steady_clock::time_point> deadline;

    /// One selection per expected spike, tolerance 1e-6 ||y||_2.
    static PursuitConfig defaults(std::size_t sparsity, const Marginals &y, SolverSpec solver = {});
};

enum class Termination { tolerance_met, max_iterations, score_floor, time_limit };

std::string_view to_string(Termination t);
Termination parse_termination(std::string_view name);

struct IterationRecord {
    BitIndex position;
    double score;
    double coefficient;
    double residual_norm;  // after this iteration's update
};

struct ReconstructionResult {
    SparseSignal recovered;
    std::vector<IterationRecord> trace;
    Termination termination;
    Marginals residual;
};

/// Plain matching pursuit over the implicit binary measurement matrix:
/// select z* by the configured solver, take the least-squares coefficient
/// c = (A^T r)_{z*} / ||a_{z*}||^2, accumulate it into the recovery and
/// deflate the residual on the rows z* satisfies.
ReconstructionResult matching_pursuit(const Marginals &y, const MeasurementSet &ms, const PursuitConfig &config);

/// True when every true spike position is recovered with
/// |coefficient| >= amplitude_floor. Extra recovered positions are allowed.
bool recovery_success(const SparseSignal &truth, const ReconstructionResult &result,
                      double amplitude_floor = kDefaultAmplitudeFloor);

}  // namespace qcs

#endif
