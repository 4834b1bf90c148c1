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

#include "qcs/qaoa.h"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "qcs/error.h"
#include "qcs/nelder_mead.h"

namespace qcs {

namespace {

void check_qubits(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        fail(ErrorKind::capacity, "qubit count " + std::to_string(num_qubits) + " outside [1, " +
                                      std::to_string(kMaxQubits) + "]");
    }
}

void check_same(const StateVector &state, int num_qubits) {
    if (state.num_qubits() != num_qubits) {
        fail(ErrorKind::shape, "state has " + std::to_string(state.num_qubits()) + " qubits, operator has " +
                                   std::to_string(num_qubits));
    }
}

void check_gate_qubit(int q, int num_qubits) {
    if (q < 1 || q > num_qubits) {
        fail(ErrorKind::bad_qubit, "gate qubit " + std::to_string(q) + " outside [1, " + std::to_string(num_qubits) + "]");
    }
}

void apply_single(StateVector &state, int qubit, Amplitude m00, Amplitude m01, Amplitude m10, Amplitude m11) {
    const std::uint64_t bit = position_mask(qubit, state.num_qubits());
    auto amps = state.amplitudes();
    for (std::size_t z = 0; z < amps.size(); z++) {
        if (z & bit) {
            continue;
        }
        Amplitude a0 = amps[z];
        Amplitude a1 = amps[z | bit];
        amps[z] = m00 * a0 + m01 * a1;
        amps[z | bit] = m10 * a0 + m11 * a1;
    }
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubits(num_qubits);
    if (amplitudes_.size() != index_space_size(num_qubits)) {
        fail(ErrorKind::shape, "amplitude count must be 2^n");
    }
}

StateVector StateVector::uniform(int num_qubits) {
    check_qubits(num_qubits);
    const std::size_t dim = index_space_size(num_qubits);
    return StateVector(num_qubits, std::vector<Amplitude>(dim, Amplitude(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

StateVector StateVector::basis(const BitIndex &z) {
    check_qubits(z.num_bits());
    std::vector<Amplitude> amps(index_space_size(z.num_bits()));
    amps[z.value()] = 1.0;
    return StateVector(z.num_bits(), std::move(amps));
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto &a : amplitudes_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amplitudes_.size());
    for (std::size_t z = 0; z < amplitudes_.size(); z++) {
        out[z] = std::norm(amplitudes_[z]);
    }
    return out;
}

double fidelity(const StateVector &a, const StateVector &b) {
    check_same(a, b.num_qubits());
    Amplitude overlap = 0.0;
    for (std::size_t z = 0; z < a.size(); z++) {
        overlap += std::conj(a[z]) * b[z];
    }
    return std::abs(overlap);
}

QaoaParams QaoaParams::zeros(std::size_t depth) {
    return QaoaParams{std::vector<double>(depth, 0.0), std::vector<double>(depth, 0.0)};
}

QaoaParams QaoaParams::padded(std::size_t depth) const {
    QaoaParams out = *this;
    if (out.gammas.size() < depth) {
        out.gammas.resize(depth, 0.0);
        out.betas.resize(depth, 0.0);
    }
    return out;
}

std::vector<double> QaoaParams::flatten() const {
    std::vector<double> flat(gammas);
    flat.insert(flat.end(), betas.begin(), betas.end());
    return flat;
}

QaoaParams QaoaParams::unflatten(std::span<const double> flat) {
    if (flat.size() % 2 != 0) {
        fail(ErrorKind::invalid_argument, "flattened QAOA parameters must have even length");
    }
    const std::size_t p = flat.size() / 2;
    return QaoaParams{std::vector<double>(flat.begin(), flat.begin() + p), std::vector<double>(flat.begin() + p, flat.end())};
}

StateVector uniform_state(int num_qubits) {
    return StateVector::uniform(num_qubits);
}

void apply_phase_layer(StateVector &state, std::span<const double> diag, double gamma) {
    if (diag.size() != state.size()) {
        fail(ErrorKind::shape, "diagonal length differs from state dimension");
    }
    auto amps = state.amplitudes();
    for (std::size_t z = 0; z < amps.size(); z++) {
        amps[z] *= std::polar(1.0, gamma * diag[z]);
    }
}

void apply_phase_layer(StateVector &state, const IsingHamiltonian &h, double gamma) {
    check_same(state, h.num_qubits());
    apply_phase_layer(state, diagonal(h), gamma);
}

void apply_mixer_layer(StateVector &state, double beta) {
    const double c = std::cos(beta);
    const Amplitude is(0.0, std::sin(beta));
    for (int q = 1; q <= state.num_qubits(); q++) {
        apply_single(state, q, c, is, is, c);
    }
}

StateVector ansatz_state(int num_qubits, std::span<const double> diag, const QaoaParams &params) {
    if (params.gammas.size() != params.betas.size()) {
        fail(ErrorKind::invalid_argument, "gamma and beta counts differ");
    }
    StateVector state = uniform_state(num_qubits);
    for (std::size_t layer = 0; layer < params.depth(); layer++) {
        apply_phase_layer(state, diag, params.gammas[layer]);
        apply_mixer_layer(state, params.betas[layer]);
    }
    return state;
}

StateVector ansatz_state(const IsingHamiltonian &h, const QaoaParams &params) {
    return ansatz_state(h.num_qubits(), diagonal(h), params);
}

double expectation(const StateVector &state, std::span<const double> diag) {
    if (diag.size() != state.size()) {
        fail(ErrorKind::shape, "diagonal length differs from state dimension");
    }
    double sum = 0.0;
    for (std::size_t z = 0; z < diag.size(); z++) {
        sum += std::norm(state[z]) * diag[z];
    }
    return sum;
}

double expectation(const StateVector &state, const IsingHamiltonian &h) {
    check_same(state, h.num_qubits());
    return expectation(state, diagonal(h));
}

OptimizationResult optimize(const IsingHamiltonian &h, const OptimizerOptions &options) {
    if (options.depth < 1) {
        fail(ErrorKind::invalid_argument, "QAOA depth must be at least 1");
    }
    check_qubits(h.num_qubits());
    const int n = h.num_qubits();
    const std::vector<double> diag = diagonal(h);

    Objective negated = [&](std::span<const double> flat) {
        return -expectation(ansatz_state(n, diag, QaoaParams::unflatten(flat)), diag);
    };

    std::vector<std::vector<double>> starts;
    if (options.warm_start) {
        starts.push_back(options.warm_start->padded(options.depth).flatten());
        if (starts.back().size() != 2 * options.depth) {
            fail(ErrorKind::invalid_argument, "warm start deeper than requested depth");
        }
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (std::size_t r = 0; r < options.restarts; r++) {
        std::vector<double> x(2 * options.depth);
        for (auto &v : x) {
            v = angle(rng);
        }
        starts.push_back(std::move(x));
    }
    if (starts.empty()) {
        starts.push_back(std::vector<double>(2 * options.depth, 0.0));
    }

    SimplexOptions simplex;
    simplex.max_evaluations = options.max_evaluations;

    OptimizationResult best{QaoaParams::zeros(options.depth), -std::numeric_limits<double>::infinity(), 0};
    int evaluations = 0;
    for (const auto &x0 : starts) {
        SimplexResult r = minimize_simplex(negated, x0, simplex);
        evaluations += r.evaluations;
        if (-r.value > best.expectation) {
            best.expectation = -r.value;
            best.params = QaoaParams::unflatten(r.x);
        }
    }
    best.evaluations = evaluations;
    return best;
}

std::vector<BitIndex> sample_candidates(const StateVector &state, std::size_t shots, std::uint64_t seed) {
    if (shots < 1) {
        fail(ErrorKind::invalid_argument, "shots must be at least 1");
    }
    std::vector<double> probs = state.probabilities();
    std::discrete_distribution<std::size_t> draw(probs.begin(), probs.end());
    std::mt19937_64 rng(seed);
    std::vector<BitIndex> out;
    out.reserve(shots);
    for (std::size_t s = 0; s < shots; s++) {
        out.emplace_back(draw(rng), state.num_qubits());
    }
    return out;
}

GateList decompose_evolution(const IsingHamiltonian &h, double t) {
    GateList gates;
    for (const auto &term : h.terms()) {
        const auto &qs = term.support;
        if (qs.empty()) {
            continue;
        }
        for (std::size_t j = 0; j + 1 < qs.size(); j++) {
            gates.push_back(Gate::cnot(qs[j], qs[j + 1]));
        }
        gates.push_back(Gate::rz(qs.back(), -2.0 * t * term.coeff));
        for (std::size_t j = qs.size() - 1; j > 0; j--) {
            gates.push_back(Gate::cnot(qs[j - 1], qs[j]));
        }
    }
    return gates;
}

GateList ansatz_gates(const IsingHamiltonian &h, const QaoaParams &params) {
    if (params.gammas.size() != params.betas.size()) {
        fail(ErrorKind::invalid_argument, "gamma and beta counts differ");
    }
    GateList gates;
    for (std::size_t layer = 0; layer < params.depth(); layer++) {
        GateList phase = decompose_evolution(h, params.gammas[layer]);
        gates.insert(gates.end(), phase.begin(), phase.end());
        for (int q = 1; q <= h.num_qubits(); q++) {
            gates.push_back(Gate::rx(q, -2.0 * params.betas[layer]));
        }
    }
    return gates;
}

void simulate_gates(StateVector &state, const GateList &gates) {
    const int n = state.num_qubits();
    for (const auto &g : gates) {
        if (!std::isfinite(g.angle)) {
            fail(ErrorKind::invalid_argument, "non-finite gate angle");
        }
        switch (g.kind) {
            case GateKind::cnot: {
                check_gate_qubit(g.control, n);
                check_gate_qubit(g.target, n);
                if (g.control == g.target) {
                    fail(ErrorKind::bad_qubit, "CNOT control equals target");
                }
                const std::uint64_t c = position_mask(g.control, n);
                const std::uint64_t t = position_mask(g.target, n);
                auto amps = state.amplitudes();
                for (std::size_t z = 0; z < amps.size(); z++) {
                    if ((z & c) && !(z & t)) {
                        std::swap(amps[z], amps[z | t]);
                    }
                }
                break;
            }
            case GateKind::rz: {
                check_gate_qubit(g.target, n);
                Amplitude lo = std::polar(1.0, -g.angle / 2.0);
                Amplitude hi = std::polar(1.0, g.angle / 2.0);
                apply_single(state, g.target, lo, 0.0, 0.0, hi);
                break;
            }
            case GateKind::rx: {
                check_gate_qubit(g.target, n);
                double c = std::cos(g.angle / 2.0);
                Amplitude s(0.0, -std::sin(g.angle / 2.0));
                apply_single(state, g.target, c, s, s, c);
                break;
            }
        }
    }
}

std::string format_gates(const GateList &gates) {
    std::ostringstream out;
    out << std::setprecision(17);
    for (const auto &g : gates) {
        switch (g.kind) {
            case GateKind::cnot:
                out << "CX " << g.control << " " << g.target << "\n";
                break;
            case GateKind::rz:
                out << "RZ " << g.target << " " << g.angle << "\n";
                break;
            case GateKind::rx:
                out << "RX " << g.target << " " << g.angle << "\n";
                break;
        }
    }
    return out.str();
}

GateList parse_gates(const std::string &text) {
    GateList gates;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name)) {
            continue;
        }
        auto bad = [&] { fail(ErrorKind::parse, "malformed gate on line " + std::to_string(line_no) + ": " + line); };
        if (name == "CX") {
            int c, t;
            if (!(fields >> c >> t)) {
                bad();
            }
            gates.push_back(Gate::cnot(c, t));
        } else if (name == "RZ" || name == "RX") {
            int q;
            double angle;
            if (!(fields >> q >> angle)) {
                bad();
            }
            gates.push_back(name == "RZ" ? Gate::rz(q, angle) : Gate::rx(q, angle));
        } else {
            fail(ErrorKind::unsupported_term, "gate '" + name + "' on line " + std::to_string(line_no));
        }
    }
    return gates;
}

}  // namespace qcs
