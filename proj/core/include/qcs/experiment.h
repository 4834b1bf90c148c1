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

#ifndef QCS_EXPERIMENT_H
#define QCS_EXPERIMENT_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcs/measurement.h"
#include "qcs/pursuit.h"
#include "qcs/signal.h"
#include "qcs/solvers.h"

namespace qcs {

enum class PatternKind { nearest_neighbor, quadruplet };

std::string_view to_string(PatternKind kind);
/// Accepts "nn" / "quad" and the long names.
PatternKind parse_pattern_kind(std::string_view name);

struct ExperimentPlan {
    int num_bits = 6;
    std::size_t sparsity = 3;
    std::size_t trials = 100;
    PatternKind patterns = PatternKind::nearest_neighbor;
    std::size_t quadruplets = 0;  // 0 selects default_quadruplet_count(num_bits)
    SolverSpec solver;
    std::uint64_t master_seed = 1;
    double amplitude_floor = kDefaultAmplitudeFloor;
    std::size_t max_iterations = 0;  // 0 selects one iteration per spike
    ValueRange values;
    double trial_time_limit_s = 60.0;  // <= 0 disables the cap
    unsigned workers = 1;

    std::size_t effective_quadruplets() const;
    std::size_t effective_max_iterations() const;
    void validate() const;
};

/// Layers needed for a given free-parameter count (two angles per layer).
std::size_t depth_for_parameter_count(std::size_t count);

/// Seed of trial `index`; shared by every configuration of a sweep.
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t index);

MeasurementSet make_patterns(const ExperimentPlan &plan, std::uint64_t trial_seed);

struct TrialOutcome {
    SparseSignal truth;
    MeasurementSet patterns;
    Marginals marginals;
    ReconstructionResult result;
    bool success;
};

/// Signal, patterns, marginals and reconstruction of one trial; fully
/// determined by (plan, trial_seed).
TrialOutcome run_single(const ExperimentPlan &plan, std::uint64_t trial_seed);

struct TrialRecord {
    std::size_t trial;
    std::uint64_t seed;
    bool success;
    std::size_t iterations;
    double runtime_s;
    bool timed_out;
};

struct SuccessReport {
    std::string label;
    ExperimentPlan plan;
    std::optional<std::size_t> parameter_count;
    std::vector<TrialRecord> trials;

    std::size_t successes() const;
    double rate() const;
};

/// Runs plan.trials trials (concurrently on plan.workers threads). Trials
/// that hit the time cap count as failures.
SuccessReport run_trials(const ExperimentPlan &plan, std::string label,
                         std::optional<std::size_t> parameter_count = std::nullopt);

/// One report per parameter count (QAOA depth ceil(count / 2)) followed by
/// the classical reference: chain DP on nearest-neighbor patterns. Every
/// report uses the same trial seeds, hence the same signals.
std::vector<SuccessReport> run_sweep(const ExperimentPlan &plan, std::span<const std::size_t> parameter_counts);

/// Per-trial rows plus one aggregate row per report.
std::string reports_to_csv(std::span<const SuccessReport> reports);

}  // namespace qcs

#endif
