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

#ifndef QCS_IO_H
#define QCS_IO_H

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcs/experiment.h"
#include "qcs/measurement.h"
#include "qcs/pursuit.h"
#include "qcs/signal.h"

namespace qcs {

// Signal:    {"n": int, "spikes": [{"pos": int, "val": float}, ...]}
// Patterns:  {"n": int, "patterns": [[{"bit": int, "val": 0|1}, ...], ...]}
// Marginals: [float, ...]
// Result:    {"n", "recovered": [...spikes], "trace": [...], "termination", "residual"}
//
// Readers fail with ErrorKind::parse on malformed input.

nlohmann::json signal_to_json(const SparseSignal &signal);
SparseSignal signal_from_json(const nlohmann::json &j);

nlohmann::json patterns_to_json(const MeasurementSet &ms);
MeasurementSet patterns_from_json(const nlohmann::json &j);

nlohmann::json marginals_to_json(const Marginals &m);
Marginals marginals_from_json(const nlohmann::json &j);

nlohmann::json result_to_json(const ReconstructionResult &result);
ReconstructionResult result_from_json(const nlohmann::json &j);

/// Keys mirror the CLI flags: n, sparsity, trials, patterns, quadruplets,
/// solver, params, restarts, max_evals, shots, seed, amplitude_floor,
/// max_iterations, time_limit_s, workers. Missing keys keep defaults.
nlohmann::json plan_to_json(const ExperimentPlan &plan);
ExperimentPlan plan_from_json(const nlohmann::json &j);

nlohmann::json trial_to_json(const TrialOutcome &outcome);
nlohmann::json reports_to_json(std::span<const SuccessReport> reports);

nlohmann::json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace qcs

#endif
