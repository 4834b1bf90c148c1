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

#include "qcs/experiment.h"

#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "qcs/error.h"
#include "qcs/seeding.h"

namespace qcs {

std::string_view to_string(PatternKind kind) {
    switch (kind) {
        case PatternKind::nearest_neighbor:
            return "nn";
        case PatternKind::quadruplet:
            return "quad";
    }
    return "unknown";
}

PatternKind parse_pattern_kind(std::string_view name) {
    if (name == "nn" || name == "nearest_neighbor") {
        return PatternKind::nearest_neighbor;
    }
    if (name == "quad" || name == "quadruplet") {
        return PatternKind::quadruplet;
    }
    fail(ErrorKind::invalid_argument, "unknown pattern kind '" + std::string(name) + "'");
}

std::size_t ExperimentPlan::effective_quadruplets() const {
    return quadruplets ? quadruplets : default_quadruplet_count(num_bits);
}

std::size_t ExperimentPlan::effective_max_iterations() const {
    return max_iterations ? max_iterations : sparsity;
}

void ExperimentPlan::validate() const {
    if (trials < 1) {
        fail(ErrorKind::invalid_argument, "trial count must be at least 1");
    }
    if (sparsity < 1 || num_bits < 1 || num_bits > kMaxBits || sparsity > index_space_size(num_bits)) {
        fail(ErrorKind::invalid_sparsity, "sparsity must lie in [1, 2^n]");
    }
    if (solver.backend == Backend::qaoa && solver.qaoa.depth < 1) {
        fail(ErrorKind::invalid_argument, "QAOA depth must be at least 1");
    }
    if (workers < 1) {
        fail(ErrorKind::invalid_argument, "worker count must be at least 1");
    }
}

std::size_t depth_for_parameter_count(std::size_t count) {
    if (count < 1) {
        fail(ErrorKind::invalid_argument, "parameter count must be at least 1");
    }
    return (count + 1) / 2;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t index) {
    return derive_seed(master_seed, index);
}

MeasurementSet make_patterns(const ExperimentPlan &plan, std::uint64_t seed) {
    switch (plan.patterns) {
        case PatternKind::nearest_neighbor:
            return nearest_neighbor_patterns(plan.num_bits);
        case PatternKind::quadruplet:
            return random_quadruplet_patterns(plan.num_bits, plan.effective_quadruplets(), derive_seed(seed, 2));
    }
    fail(ErrorKind::invalid_argument, "unknown pattern kind");
}

namespace {

TrialOutcome run_trial(const ExperimentPlan &plan, std::uint64_t seed,
                       std::optional<std::chrono::steady_clock::time_point> deadline) {
    SparseSignal truth = random_sparse_signal(plan.num_bits, plan.sparsity, plan.values, derive_seed(seed, 1));
    MeasurementSet ms = make_patterns(plan, seed);
    Marginals y = measure(truth, ms);

    SolverSpec solver = plan.solver;
    solver.qaoa.seed = derive_seed(seed, 3);
    PursuitConfig cfg = PursuitConfig::defaults(plan.sparsity, y, solver);
    cfg.max_iterations = plan.effective_max_iterations();
    cfg.deadline = deadline;

    ReconstructionResult result = matching_pursuit(y, ms, cfg);
    bool success = result.termination != Termination::time_limit &&
                   recovery_success(truth, result, plan.amplitude_floor);
    return TrialOutcome{std::move(truth), std::move(ms), std::move(y), std::move(result), success};
}

}  // namespace

TrialOutcome run_single(const ExperimentPlan &plan, std::uint64_t seed) {
    plan.validate();
    return run_trial(plan, seed, std::nullopt);
}

std::size_t SuccessReport::successes() const {
    std::size_t count = 0;
    for (const auto &t : trials) {
        count += t.success ? 1 : 0;
    }
    return count;
}

double SuccessReport::rate() const {
    return trials.empty() ? 0.0 : static_cast<double>(successes()) / static_cast<double>(trials.size());
}

SuccessReport run_trials(const ExperimentPlan &plan, std::string label, std::optional<std::size_t> parameter_count) {
    plan.validate();
    SuccessReport report{std::move(label), plan, parameter_count, std::vector<TrialRecord>(plan.trials)};

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= plan.trials) {
                return;
            }
            try {
                std::uint64_t seed = trial_seed(plan.master_seed, i);
                auto start = std::chrono::steady_clock::now();
                std::optional<std::chrono::steady_clock::time_point> deadline;
                if (plan.trial_time_limit_s > 0) {
                    deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                           std::chrono::duration<double>(plan.trial_time_limit_s));
                }
                TrialOutcome outcome = run_trial(plan, seed, deadline);
                double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                report.trials[i] = TrialRecord{i,
                                               seed,
                                               outcome.success,
                                               outcome.result.trace.size(),
                                               elapsed,
                                               outcome.result.termination == Termination::time_limit};
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = plan.trials;
                return;
            }
        }
    };

    unsigned count = std::max(1u, std::min<unsigned>(plan.workers, static_cast<unsigned>(plan.trials)));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < count; t++) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return report;
}

std::vector<SuccessReport> run_sweep(const ExperimentPlan &plan, std::span<const std::size_t> parameter_counts) {
    plan.validate();
    std::vector<SuccessReport> reports;
    for (std::size_t count : parameter_counts) {
        ExperimentPlan p = plan;
        p.solver.backend = Backend::qaoa;
        p.solver.qaoa.depth = depth_for_parameter_count(count);
        std::string label = "qaoa/" + std::string(to_string(p.patterns)) + "/params=" + std::to_string(count);
        reports.push_back(run_trials(p, std::move(label), count));
    }
    ExperimentPlan baseline = plan;
    baseline.patterns = PatternKind::nearest_neighbor;
    baseline.solver.backend = Backend::chain_dp;
    reports.push_back(run_trials(baseline, "chain/nn/baseline"));
    return reports;
}

std::string reports_to_csv(std::span<const SuccessReport> reports) {
    std::ostringstream out;
    out << std::setprecision(10);
    out << "label,pattern_kind,solver,parameter_count,depth,trial,seed,success,iterations,runtime_s,timed_out\n";
    for (const auto &r : reports) {
        std::string prefix = r.label + "," + std::string(to_string(r.plan.patterns)) + "," +
                             std::string(to_string(r.plan.solver.backend)) + "," +
                             (r.parameter_count ? std::to_string(*r.parameter_count) : "") + "," +
                             (r.plan.solver.backend == Backend::qaoa ? std::to_string(r.plan.solver.qaoa.depth) : "");
        double total = 0.0;
        std::size_t timeouts = 0;
        for (const auto &t : r.trials) {
            out << prefix << "," << t.trial << "," << t.seed << "," << (t.success ? 1 : 0) << "," << t.iterations << ","
                << t.runtime_s << "," << (t.timed_out ? 1 : 0) << "\n";
            total += t.runtime_s;
            timeouts += t.timed_out ? 1 : 0;
        }
        out << prefix << ",all,," << r.rate() << "," << r.successes() << "," << total << "," << timeouts << "\n";
    }
    return out.str();
}

}  // namespace qcs
