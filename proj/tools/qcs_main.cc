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

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qcs/error.h"
#include "qcs/experiment.h"
#include "qcs/hamiltonian.h"
#include "qcs/io.h"
#include "qcs/qaoa.h"

using namespace qcs;

namespace {

void emit(const std::string &text, const std::string &out) {
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
    }
}

void emit(const nlohmann::json &j, const std::string &out) {
    emit(j.dump(2) + "\n", out);
}

struct SolverFlags {
    std::string solver = "brute";
    std::size_t params = 2;
    std::size_t restarts = 10;
    int max_evals = 200;
    std::size_t shots = 1024;

    void attach(CLI::App *cmd) {
        cmd->add_option("--solver", solver, "Support detection backend")
            ->check(CLI::IsMember({"brute", "chain", "qaoa"}))
            ->capture_default_str();
        cmd->add_option("--params", params, "QAOA free-parameter count (depth = ceil(count/2))")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--restarts", restarts, "Optimizer restarts per QAOA solve")->capture_default_str();
        cmd->add_option("--max-evals", max_evals, "Objective evaluations per restart")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--shots", shots, "Samples drawn from each optimized state")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    }

    SolverSpec spec(std::uint64_t seed) const {
        SolverSpec s;
        s.backend = parse_backend(solver);
        s.qaoa.depth = depth_for_parameter_count(params);
        s.qaoa.restarts = restarts;
        s.qaoa.max_evaluations = max_evals;
        s.qaoa.shots = shots;
        s.qaoa.seed = seed;
        return s;
    }
};

std::vector<std::size_t> parse_counts(const std::string &csv) {
    std::vector<std::size_t> counts;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t end = csv.find(',', start);
        std::string item = csv.substr(start, end == std::string::npos ? std::string::npos : end - start);
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size() || v < 1) {
                throw std::invalid_argument(item);
            }
            counts.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error &) {
            fail(ErrorKind::invalid_argument, "bad parameter count '" + item + "' in --sweep");
        }
        if (end == std::string::npos) {
            break;
        }
        start = end + 1;
    }
    return counts;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Sparse signal recovery from marginal measurements with Ising support detection"};
    app.require_subcommand(1);

    int n = 6;
    std::size_t sparsity = 3;
    std::string pattern_kind = "nn";
    std::size_t quadruplets = 0;
    std::uint64_t seed = 1;
    std::string out;
    std::string signal_path, pattern_path, marginals_path, plan_path;
    SolverFlags solver;
    std::size_t max_iterations = 0;

    auto add_n = [&](CLI::App *cmd) {
        cmd->add_option("--n", n, "Number of index bits")->check(CLI::Range(1, kMaxBits))->capture_default_str();
    };
    auto add_patterns = [&](CLI::App *cmd) {
        cmd->add_option("--patterns", pattern_kind, "Pattern family")
            ->check(CLI::IsMember({"nn", "quad"}))
            ->capture_default_str();
        cmd->add_option("--quadruplets", quadruplets, "Quadruplet count (0 = default for n)")->capture_default_str();
    };
    auto add_seed = [&](CLI::App *cmd) { cmd->add_option("--seed", seed, "Random seed")->capture_default_str(); };
    auto add_out = [&](CLI::App *cmd) { cmd->add_option("--out", out, "Output file (default stdout)"); };

    CLI::App *generate = app.add_subcommand("generate", "Draw a random sparse signal");
    add_n(generate);
    generate->add_option("--sparsity", sparsity, "Number of spikes")->capture_default_str();
    add_seed(generate);
    add_out(generate);

    CLI::App *patterns = app.add_subcommand("patterns", "Build a measurement pattern set");
    add_n(patterns);
    add_patterns(patterns);
    add_seed(patterns);
    add_out(patterns);

    CLI::App *measure_cmd = app.add_subcommand("measure", "Compute marginals of a signal");
    measure_cmd->add_option("--signal", signal_path, "Signal JSON")->required()->check(CLI::ExistingFile);
    measure_cmd->add_option("--pattern-file", pattern_path, "Pattern JSON")->required()->check(CLI::ExistingFile);
    add_out(measure_cmd);

    CLI::App *reconstruct = app.add_subcommand("reconstruct", "Run matching pursuit on marginals");
    reconstruct->add_option("--marginals", marginals_path, "Marginals JSON")->required()->check(CLI::ExistingFile);
    reconstruct->add_option("--pattern-file", pattern_path, "Pattern JSON")->required()->check(CLI::ExistingFile);
    reconstruct->add_option("--sparsity", sparsity, "Expected spike count")->capture_default_str();
    reconstruct->add_option("--max-iterations", max_iterations, "Iteration cap (0 = sparsity)");
    solver.attach(reconstruct);
    add_seed(reconstruct);
    add_out(reconstruct);

    std::size_t trials = 100;
    std::string sweep;
    std::string format = "csv";
    double time_limit = 60.0;
    unsigned workers = 1;
    CLI::App *experiment = app.add_subcommand("experiment", "Run seeded recovery trials and report success rates");
    experiment->add_option("--plan", plan_path, "Plan JSON; explicit flags override it")->check(CLI::ExistingFile);
    add_n(experiment);
    experiment->add_option("--sparsity", sparsity, "Spikes per signal")->capture_default_str();
    add_patterns(experiment);
    solver.attach(experiment);
    experiment->add_option("--trials", trials, "Trials per configuration")->capture_default_str();
    experiment->add_option("--max-iterations", max_iterations, "Pursuit iteration cap (0 = sparsity)");
    experiment->add_option("--sweep", sweep, "Comma-separated QAOA parameter counts; adds the chain baseline");
    experiment->add_option("--time-limit", time_limit, "Per-trial cap in seconds (<= 0 disables)")
        ->capture_default_str();
    experiment->add_option("--workers", workers, "Concurrent trials")->check(CLI::PositiveNumber);
    experiment->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    add_seed(experiment);
    add_out(experiment);

    double gamma = 0.0, beta = 0.0;
    bool as_circuit = false;
    CLI::App *hamiltonian = app.add_subcommand("hamiltonian", "Print the support-detection Hamiltonian of a residual");
    hamiltonian->add_option("--marginals", marginals_path, "Marginals JSON")->required()->check(CLI::ExistingFile);
    hamiltonian->add_option("--pattern-file", pattern_path, "Pattern JSON")->required()->check(CLI::ExistingFile);
    hamiltonian->add_flag("--circuit", as_circuit, "Emit a depth-1 ansatz as CX/RZ/RX gates instead");
    hamiltonian->add_option("--gamma", gamma, "Phase angle for --circuit");
    hamiltonian->add_option("--beta", beta, "Mixer angle for --circuit");
    add_out(hamiltonian);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (generate->parsed()) {
            emit(signal_to_json(random_sparse_signal(n, sparsity, ValueRange{}, seed)), out);
        } else if (patterns->parsed()) {
            ExperimentPlan plan;
            plan.num_bits = n;
            plan.patterns = parse_pattern_kind(pattern_kind);
            plan.quadruplets = quadruplets;
            emit(patterns_to_json(make_patterns(plan, seed)), out);
        } else if (measure_cmd->parsed()) {
            SparseSignal x = signal_from_json(read_json_file(signal_path));
            MeasurementSet ms = patterns_from_json(read_json_file(pattern_path));
            if (x.num_bits() != ms.num_bits()) {
                fail(ErrorKind::shape, "signal and patterns disagree on n");
            }
            emit(marginals_to_json(measure(x, ms)), out);
        } else if (reconstruct->parsed()) {
            Marginals y = marginals_from_json(read_json_file(marginals_path));
            MeasurementSet ms = patterns_from_json(read_json_file(pattern_path));
            PursuitConfig cfg = PursuitConfig::defaults(sparsity, y, solver.spec(seed));
            if (max_iterations) {
                cfg.max_iterations = max_iterations;
            }
            emit(result_to_json(matching_pursuit(y, ms, cfg)), out);
        } else if (experiment->parsed()) {
            ExperimentPlan plan = plan_path.empty() ? ExperimentPlan{} : plan_from_json(read_json_file(plan_path));
            auto given = [&](const char *flag) { return plan_path.empty() || experiment->count(flag) > 0; };
            if (given("--n")) plan.num_bits = n;
            if (given("--sparsity")) plan.sparsity = sparsity;
            if (given("--patterns")) plan.patterns = parse_pattern_kind(pattern_kind);
            if (given("--quadruplets")) plan.quadruplets = quadruplets;
            if (given("--trials")) plan.trials = trials;
            if (given("--seed")) plan.master_seed = seed;
            if (given("--max-iterations")) plan.max_iterations = max_iterations;
            if (given("--time-limit")) plan.trial_time_limit_s = time_limit;
            if (given("--workers")) plan.workers = workers;
            SolverSpec spec = solver.spec(0);
            if (given("--solver")) plan.solver.backend = spec.backend;
            if (given("--params")) plan.solver.qaoa.depth = spec.qaoa.depth;
            if (given("--restarts")) plan.solver.qaoa.restarts = spec.qaoa.restarts;
            if (given("--max-evals")) plan.solver.qaoa.max_evaluations = spec.qaoa.max_evaluations;
            if (given("--shots")) plan.solver.qaoa.shots = spec.qaoa.shots;
            plan.validate();

            std::vector<SuccessReport> reports;
            if (!sweep.empty()) {
                reports = run_sweep(plan, parse_counts(sweep));
            } else {
                std::optional<std::size_t> count;
                if (plan.solver.backend == Backend::qaoa) {
                    count = 2 * plan.solver.qaoa.depth;
                }
                std::string label = std::string(to_string(plan.solver.backend)) + "/" +
                                    std::string(to_string(plan.patterns));
                reports.push_back(run_trials(plan, label, count));
            }
            if (format == "json") {
                emit(reports_to_json(reports), out);
            } else {
                emit(reports_to_csv(reports), out);
            }
            for (const auto &r : reports) {
                std::fprintf(stderr, "%-28s %zu/%zu = %.3f\n", r.label.c_str(), r.successes(), r.trials.size(),
                             r.rate());
            }
        } else if (hamiltonian->parsed()) {
            Marginals r = marginals_from_json(read_json_file(marginals_path));
            MeasurementSet ms = patterns_from_json(read_json_file(pattern_path));
            IsingHamiltonian h = build_hamiltonian(ms, r);
            emit(as_circuit ? format_gates(ansatz_gates(h, QaoaParams{{gamma}, {beta}})) : dump(h), out);
        }
    } catch (const Error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
