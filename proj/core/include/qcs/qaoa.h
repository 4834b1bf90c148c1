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

#ifndef QCS_QAOA_H
#define QCS_QAOA_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcs/bit_index.h"
#include "qcs/hamiltonian.h"

namespace qcs {

/// Hard cap on simulated qubits.
inline constexpr int kMaxQubits = 20;

using Amplitude = std::complex<double>;

/// 2^n complex amplitudes indexed like BitIndex::value() (qubit 1 is the
/// most significant bit of the index).
class StateVector {
   public:
    StateVector(int num_qubits, std::vector<Amplitude> amplitudes);

    static StateVector uniform(int num_qubits);
    static StateVector basis(const BitIndex &z);

    int num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t size() const noexcept {
        return amplitudes_.size();
    }
    const Amplitude &operator[](std::size_t z) const {
        return amplitudes_[z];
    }
    Amplitude &operator[](std::size_t z) {
        return amplitudes_[z];
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }
    std::span<Amplitude> amplitudes() noexcept {
        return amplitudes_;
    }

    double norm() const;
    std::vector<double> probabilities() const;

   private:
    int num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// |<a|b>|
double fidelity(const StateVector &a, const StateVector &b);

/// Angles of a depth-p ansatz: p phase angles and p mixer angles.
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    static QaoaParams zeros(std::size_t depth);
    std::size_t depth() const noexcept {
        return gammas.size();
    }
    std::size_t parameter_count() const noexcept {
        return gammas.size() + betas.size();
    }
    /// Copy extended with zero angles up to `depth` layers.
    QaoaParams padded(std::size_t depth) const;

    /// Flat layout [gamma_1..gamma_p, beta_1..beta_p].
    std::vector<double> flatten() const;
    static QaoaParams unflatten(std::span<const double> flat);
};

StateVector uniform_state(int num_qubits);

/// amp_z <- amp_z * exp(i * gamma * h(z)).
void apply_phase_layer(StateVector &state, const IsingHamiltonian &h, double gamma);
void apply_phase_layer(StateVector &state, std::span<const double> diag, double gamma);

/// exp(i * beta * X) on every qubit, i.e. RX(-2 beta).
void apply_mixer_layer(StateVector &state, double beta);

/// Uniform superposition followed by p alternating phase/mixer layers.
StateVector ansatz_state(const IsingHamiltonian &h, const QaoaParams &params);
StateVector ansatz_state(int num_qubits, std::span<const double> diag, const QaoaParams &params);

/// sum_z |amp_z|^2 h(z).
double expectation(const StateVector &state, const IsingHamiltonian &h);
double expectation(const StateVector &state, std::span<const double> diag);

struct OptimizerOptions {
    std::size_t depth = 1;
    std::size_t restarts = 10;
    int max_evaluations = 200;  // per restart
    std::uint64_t seed = 0;
    /// Tried first (padded to `depth`) when present.
    std::optional<QaoaParams> warm_start;
};

struct OptimizationResult {
    QaoaParams params;
    double expectation;
    int evaluations;
};

/// Maximizes the ansatz expectation of h with Nelder-Mead simplex searches
/// started from the warm start (if any) and `restarts` points drawn
/// uniformly from [0, 2 pi)^{2p}. Restart points come from one seeded stream,
/// so a run with more restarts explores a superset of the starts.
OptimizationResult optimize(const IsingHamiltonian &h, const OptimizerOptions &options);

/// i.i.d. basis-state draws from |amp_z|^2.
std::vector<BitIndex> sample_candidates(const StateVector &state, std::size_t shots, std::uint64_t seed);

enum class GateKind { cnot, rz, rx };

struct Gate {
    GateKind kind;
    int control;  // CNOT only; 0 otherwise
    int target;
    double angle;  // RZ/RX only

    static Gate cnot(int control, int target) {
        return Gate{GateKind::cnot, control, target, 0.0};
    }
    static Gate rz(int qubit, double angle) {
        return Gate{GateKind::rz, 0, qubit, angle};
    }
    static Gate rx(int qubit, double angle) {
        return Gate{GateKind::rx, 0, qubit, angle};
    }

    friend bool operator==(const Gate &, const Gate &) = default;
};

using GateList = std::vector<Gate>;

/// Gate-model form of exp(i t H): for each Z-string term on qubits
/// q_1 < ... < q_k a CNOT ladder q_1->q_2 ... q_{k-1}->q_k, one
/// RZ(q_k, -2 t coeff), then the ladder reversed. Identity terms are a global
/// phase and emit nothing. RZ(theta) = exp(-i theta Z / 2).
GateList decompose_evolution(const IsingHamiltonian &h, double t);

/// Full ansatz as gates (phase layers via decompose_evolution, mixers as
/// RX(q, -2 beta)). Assumes the uniform superposition as input state.
GateList ansatz_gates(const IsingHamiltonian &h, const QaoaParams &params);

void simulate_gates(StateVector &state, const GateList &gates);

/// "CX c t", "RZ q angle", "RX q angle", one gate per line.
std::string format_gates(const GateList &gates);
GateList parse_gates(const std::string &text);

}  // namespace qcs

#endif
