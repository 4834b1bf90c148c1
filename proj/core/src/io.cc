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

#include "qcs/io.h"

#include <fstream>
#include <sstream>

#include "qcs/error.h"

namespace qcs {

using nlohmann::json;

namespace {

template <typename F>
auto guarded(const char *what, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception &e) {
        fail(ErrorKind::parse, std::string(what) + ": " + e.what());
    }
}

json spikes_to_json(const SparseSignal &signal) {
    json spikes = json::array();
    for (const auto &s : signal.spikes()) {
        spikes.push_back({{"pos", s.position.value()}, {"val", s.value}});
    }
    return spikes;
}

std::vector<Spike> spikes_from_json(const json &arr, int n) {
    std::vector<Spike> spikes;
    for (const auto &s : arr) {
        spikes.push_back(Spike{BitIndex(s.at("pos").get<std::uint64_t>(), n), s.at("val").get<double>()});
    }
    return spikes;
}

}  // namespace

json signal_to_json(const SparseSignal &signal) {
    return json{{"n", signal.num_bits()}, {"spikes", spikes_to_json(signal)}};
}

SparseSignal signal_from_json(const json &j) {
    return guarded("signal", [&] {
        int n = j.at("n").get<int>();
        return SparseSignal(n, spikes_from_json(j.at("spikes"), n));
    });
}

json patterns_to_json(const MeasurementSet &ms) {
    json patterns = json::array();
    for (const auto &p : ms.patterns()) {
        json row = json::array();
        for (const auto &c : p.constraints()) {
            row.push_back({{"bit", c.bit}, {"val", c.value}});
        }
        patterns.push_back(std::move(row));
    }
    return json{{"n", ms.num_bits()}, {"patterns", std::move(patterns)}};
}

MeasurementSet patterns_from_json(const json &j) {
    return guarded("patterns", [&] {
        std::vector<Pattern> patterns;
        for (const auto &row : j.at("patterns")) {
            std::vector<BitConstraint> cs;
            for (const auto &c : row) {
                cs.push_back({c.at("bit").get<int>(), c.at("val").get<int>()});
            }
            patterns.emplace_back(std::move(cs));
        }
        return MeasurementSet(j.at("n").get<int>(), std::move(patterns));
    });
}

json marginals_to_json(const Marginals &m) {
    return json(m.values);
}

Marginals marginals_from_json(const json &j) {
    return guarded("marginals", [&] {
        if (!j.is_array()) {
            fail(ErrorKind::parse, "marginals must be a JSON array of numbers");
        }
        return Marginals{j.get<std::vector<double>>()};
    });
}

json result_to_json(const ReconstructionResult &result) {
    json trace = json::array();
    for (std::size_t i = 0; i < result.trace.size(); i++) {
        const auto &t = result.trace[i];
        trace.push_back({{"iteration", i + 1},
                         {"pos", t.position.value()},
                         {"score", t.score},
                         {"coefficient", t.coefficient},
                         {"residual_norm", t.residual_norm}});
    }
    return json{{"n", result.recovered.num_bits()},
                {"recovered", spikes_to_json(result.recovered)},
                {"trace", std::move(trace)},
                {"termination", std::string(to_string(result.termination))},
                {"residual", result.residual.values}};
}

ReconstructionResult result_from_json(const json &j) {
    return guarded("result", [&] {
        int n = j.at("n").get<int>();
        std::vector<IterationRecord> trace;
        for (const auto &t : j.at("trace")) {
            trace.push_back(IterationRecord{BitIndex(t.at("pos").get<std::uint64_t>(), n), t.at("score").get<double>(),
                                            t.at("coefficient").get<double>(), t.at("residual_norm").get<double>()});
        }
        return ReconstructionResult{SparseSignal(n, spikes_from_json(j.at("recovered"), n)), std::move(trace),
                                    parse_termination(j.at("termination").get<std::string>()),
                                    Marginals{j.value("residual", std::vector<double>{})}};
    });
}

json plan_to_json(const ExperimentPlan &plan) {
    return json{{"n", plan.num_bits},
                {"sparsity", plan.sparsity},
                {"trials", plan.trials},
                {"patterns", std::string(to_string(plan.patterns))},
                {"quadruplets", plan.effective_quadruplets()},
                {"solver", std::string(to_string(plan.solver.backend))},
                {"params", 2 * plan.solver.qaoa.depth},
                {"depth", plan.solver.qaoa.depth},
                {"restarts", plan.solver.qaoa.restarts},
                {"max_evals", plan.solver.qaoa.max_evaluations},
                {"shots", plan.solver.qaoa.shots},
                {"seed", plan.master_seed},
                {"amplitude_floor", plan.amplitude_floor},
                {"max_iterations", plan.effective_max_iterations()},
                {"time_limit_s", plan.trial_time_limit_s},
                {"workers", plan.workers}};
}

ExperimentPlan plan_from_json(const json &j) {
    return guarded("plan", [&] {
        ExperimentPlan plan;
        plan.num_bits = j.value("n", plan.num_bits);
        plan.sparsity = j.value("sparsity", plan.sparsity);
        plan.trials = j.value("trials", plan.trials);
        if (j.contains("patterns")) {
            plan.patterns = parse_pattern_kind(j.at("patterns").get<std::string>());
        }
        plan.quadruplets = j.value("quadruplets", plan.quadruplets);
        if (j.contains("solver")) {
            plan.solver.backend = parse_backend(j.at("solver").get<std::string>());
        }
        if (j.contains("params")) {
            plan.solver.qaoa.depth = depth_for_parameter_count(j.at("params").get<std::size_t>());
        }
        plan.solver.qaoa.depth = j.value("depth", plan.solver.qaoa.depth);
        plan.solver.qaoa.restarts = j.value("restarts", plan.solver.qaoa.restarts);
        plan.solver.qaoa.max_evaluations = j.value("max_evals", plan.solver.qaoa.max_evaluations);
        plan.solver.qaoa.shots = j.value("shots", plan.solver.qaoa.shots);
        plan.master_seed = j.value("seed", plan.master_seed);
        plan.amplitude_floor = j.value("amplitude_floor", plan.amplitude_floor);
        plan.max_iterations = j.value("max_iterations", plan.max_iterations);
        plan.trial_time_limit_s = j.value("time_limit_s", plan.trial_time_limit_s);
        plan.workers = j.value("workers", plan.workers);
        plan.validate();
        return plan;
    });
}

json trial_to_json(const TrialOutcome &outcome) {
    return json{{"truth", signal_to_json(outcome.truth)},
                {"patterns", patterns_to_json(outcome.patterns)},
                {"marginals", marginals_to_json(outcome.marginals)},
                {"result", result_to_json(outcome.result)},
                {"success", outcome.success}};
}

json reports_to_json(std::span<const SuccessReport> reports) {
    json out = json::array();
    for (const auto &r : reports) {
        json trials = json::array();
        for (const auto &t : r.trials) {
            trials.push_back({{"trial", t.trial},
                              {"seed", t.seed},
                              {"success", t.success},
                              {"iterations", t.iterations},
                              {"runtime_s", t.runtime_s},
                              {"timed_out", t.timed_out}});
        }
        json entry{{"label", r.label},
                   {"rate", r.rate()},
                   {"successes", r.successes()},
                   {"config", plan_to_json(r.plan)},
                   {"trials", std::move(trials)}};
        if (r.parameter_count) {
            entry["parameter_count"] = *r.parameter_count;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::parse, "cannot open " + path);
    }
    return guarded(path.c_str(), [&] { return json::parse(in); });
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        fail(ErrorKind::invalid_argument, "cannot write " + path);
    }
    out << text;
}

}  // namespace qcs
