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

#include "qcs/pursuit.h"

#include <cmath>
#include <map>

#include "qcs/error.h"

namespace qcs {

PursuitConfig PursuitConfig::defaults(std::size_t sparsity, const Marginals &y, SolverSpec solver) {
    PursuitConfig cfg;
    cfg.max_iterations = std::max<std::size_t>(sparsity, 1);
    cfg.residual_tolerance = kDefaultRelativeTolerance * y.norm();
    cfg.solver = solver;
    return cfg;
}

std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::tolerance_met:
            return "tolerance_met";
        case Termination::max_iterations:
            return "max_iterations";
        case Termination::score_floor:
            return "score_floor";
        case Termination::time_limit:
            return "time_limit";
    }
    return "unknown";
}

Termination parse_termination(std::string_view name) {
    for (auto t : {Termination::tolerance_met, Termination::max_iterations, Termination::score_floor,
                   Termination::time_limit}) {
        if (to_string(t) == name) {
            return t;
        }
    }
    fail(ErrorKind::parse, "unknown termination '" + std::string(name) + "'");
}

ReconstructionResult matching_pursuit(const Marginals &y, const MeasurementSet &ms, const PursuitConfig &config) {
    if (y.size() != ms.size()) {
        fail(ErrorKind::shape, "marginals length " + std::to_string(y.size()) + " differs from pattern count " +
                                   std::to_string(ms.size()));
    }
    if (config.max_iterations < 1) {
        fail(ErrorKind::invalid_argument, "max_iterations must be at least 1");
    }
    if (!(config.residual_tolerance >= 0.0) || !(config.min_score >= 0.0)) {
        fail(ErrorKind::invalid_argument, "tolerances must be non-negative");
    }

    const int n = ms.num_bits();
    Marginals r = y;
    std::map<std::uint64_t, double> accumulated;
    std::vector<IterationRecord> trace;
    Termination termination = Termination::max_iterations;

    if (r.norm() <= config.residual_tolerance) {
        termination = Termination::tolerance_met;
    } else {
        for (std::size_t it = 0; it < config.max_iterations; it++) {
            if (config.deadline && std::chrono::steady_clock::now() >= *config.deadline) {
                termination = Termination::time_limit;
                break;
            }
            SolverOutcome pick = detect_support(config.solver, ms, r, it);
            if (pick.score < config.min_score) {
                termination = Termination::score_floor;
                break;
            }
            double norm_sq = column_norm_sq(pick.position, ms);
            if (norm_sq == 0.0) {
                fail(ErrorKind::degenerate_column,
                     "solver selected " + pick.position.str() + ", which no pattern measures");
            }
            double c = column_dot(pick.position, r, ms) / norm_sq;
            accumulated[pick.position.value()] += c;
            for (std::size_t i = 0; i < ms.size(); i++) {
                if (ms.matches(i, pick.position.value())) {
                    r.values[i] -= c;
                }
            }
            double rn = r.norm();
            trace.push_back(IterationRecord{pick.position, pick.score, c, rn});
            if (rn <= config.residual_tolerance) {
                termination = Termination::tolerance_met;
                break;
            }
        }
    }

    std::vector<Spike> spikes;
    for (const auto &[z, c] : accumulated) {
        if (c != 0.0) {
            spikes.push_back(Spike{BitIndex(z, n), c});
        }
    }
    return ReconstructionResult{SparseSignal(n, std::move(spikes)), std::move(trace), termination, std::move(r)};
}

bool recovery_success(const SparseSignal &truth, const ReconstructionResult &result, double amplitude_floor) {
    if (truth.num_bits() != result.recovered.num_bits()) {
        fail(ErrorKind::shape, "truth and recovery have different bit counts");
    }
    for (const auto &spike : truth.spikes()) {
        auto v = result.recovered.value_at(spike.position.value());
        if (!v || std::abs(*v) < amplitude_floor) {
            return false;
        }
    }
    return true;
}

}  // namespace qcs
