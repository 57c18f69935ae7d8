// Copyright 2026 The vqlslab Authors
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

/**
 * @file
 * Exact statevector simulation of the three-wall rotation ansatz and of the
 * Householder b-preparation unitary.
 *
 * Qubit j addresses bit (q - 1 - j) of a basis index, matching the Pauli
 * label convention (qubit 0 is the leftmost tensor factor).
 */
#pragma once

#include <span>
#include <string>
#include <vector>

#include "vqls/common.hpp"

namespace vqls {

class StateVector {
  public:
    StateVector(int qubits, CVector amplitudes);

    [[nodiscard]] int qubits() const noexcept { return qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
    [[nodiscard]] const CVector &amplitudes() const noexcept { return amps_; }
    [[nodiscard]] CVector &amplitudes() noexcept { return amps_; }

    /// Index mask of qubit j within a basis-state index.
    [[nodiscard]] std::size_t qubit_mask(int qubit) const noexcept {
        return std::size_t{1} << (qubits_ - 1 - qubit);
    }

  private:
    int qubits_;
    CVector amps_;
};

/// JSON array of [re, im] pairs, for debugging dumps.
std::string to_json(const StateVector &v);

/// q × 3 rotation angles (radians), row-major: angle(qubit, slot).
class ParamSet {
  public:
    explicit ParamSet(int qubits);
    ParamSet(int qubits, std::vector<double> angles);

    [[nodiscard]] int qubits() const noexcept { return qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return angles_.size(); }
    [[nodiscard]] double operator()(int qubit, int slot) const {
        return angles_[static_cast<std::size_t>(3 * qubit + slot)];
    }
    double &operator()(int qubit, int slot) {
        return angles_[static_cast<std::size_t>(3 * qubit + slot)];
    }
    [[nodiscard]] std::span<const double> flat() const noexcept { return angles_; }
    [[nodiscard]] std::span<double> flat() noexcept { return angles_; }

    friend bool operator==(const ParamSet &, const ParamSet &) = default;

  private:
    int qubits_;
    std::vector<double> angles_;
};

/// |0…0⟩ on q qubits.
StateVector prepare_zero(int qubits);

/// Ry(θ) = [[cos θ/2, -sin θ/2], [sin θ/2, cos θ/2]] on `qubit`.
void apply_ry(StateVector &v, int qubit, double theta);

/// Rz(θ) = diag(e^{-iθ/2}, e^{iθ/2}) on `qubit`.
void apply_rz(StateVector &v, int qubit, double theta);

/// Controlled-Z between two distinct qubits.
void apply_cz(StateVector &v, int a, int b);

/// CZ on (0,1), (1,2), …, (q-1,0); a single CZ for q = 2 and none for q = 1.
void apply_cz_ring(StateVector &v);

/**
 * V(α)|0…0⟩ with layers: Ry(α[·,0]) wall, CZ ring, Rz(α[·,1]) wall,
 * CZ ring, Ry(α[·,2]) wall.
 *
 * Note the Rz wall commutes with both CZ rings, so the rings cancel and the
 * prepared state is always a product state.
 */
StateVector ansatz_state(const ParamSet &p);

/**
 * U_b with U_b|0…0⟩ = |b⟩, stored as U_b = e^{iφ}(I - 2 w w†) or, when
 * e^{-iφ}b is already |0…0⟩, as the phase e^{iφ} alone.
 */
class BPrepOperator {
  public:
    [[nodiscard]] int qubits() const noexcept { return qubits_; }
    [[nodiscard]] bool is_identity() const noexcept { return identity_; }
    [[nodiscard]] Complex phase() const noexcept { return phase_; }
    /// Householder vector; empty when is_identity().
    [[nodiscard]] const CVector &reflector() const noexcept { return w_; }

    friend BPrepOperator build_bprep(const CVector &b);

  private:
    BPrepOperator() = default;

    int qubits_ = 0;
    bool identity_ = true;
    Complex phase_{1.0, 0.0};
    CVector w_;
};

/// Builds U_b for a unit-norm b (|‖b‖ - 1| <= 1e-10), checking U_b|0⟩ = b to 1e-10.
BPrepOperator build_bprep(const CVector &b);

/// U_b v in O(N).
CVector apply_bprep(const BPrepOperator &u, const CVector &v);

/// U_b† v in O(N).
CVector apply_bprep_adjoint(const BPrepOperator &u, const CVector &v);

} // namespace vqls
