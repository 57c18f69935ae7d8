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
 * Global and local VQLS cost functions, evaluated exactly from statevectors.
 *
 * With ψ = A x:
 *   global  Ĉ_G = ⟨ψ|ψ⟩ - |⟨b|ψ⟩|²,           C_G = Ĉ_G / ⟨ψ|ψ⟩
 *   local   Ĉ_L = ⟨φ|φ⟩ - (1/q) Σ_j Π_j(φ),  C_L = Ĉ_L / ⟨ψ|ψ⟩,  φ = U_b† ψ
 * where Π_j(φ) is the weight of φ on basis states with qubit j in |0⟩.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vqls/pauli.hpp"
#include "vqls/problem.hpp"
#include "vqls/simulator.hpp"

namespace vqls {

enum class CostKind { Global, Local };

std::string_view to_string(CostKind kind) noexcept;
CostKind parse_cost_kind(std::string_view s);

struct CostReport {
    CostKind kind = CostKind::Global;
    double raw = 0.0;         ///< unnormalized Ĉ
    double normalized = 0.0;  ///< C = Ĉ / ⟨ψ|ψ⟩
    double psi_norm_sq = 0.0; ///< ⟨ψ|ψ⟩
};

/// How ψ = A x is formed.
enum class MatvecMode { Dense, Pauli };

/**
 * Cost evaluation bound to one system. Caches U_b and, in Pauli mode, the
 * decomposition of A. Evaluation is const and thread-safe.
 */
class CostModel {
  public:
    explicit CostModel(const LinearSystem &sys, MatvecMode mode = MatvecMode::Dense);
    explicit CostModel(LinearSystem &&, MatvecMode = MatvecMode::Dense) = delete;

    [[nodiscard]] const LinearSystem &system() const noexcept { return *sys_; }
    [[nodiscard]] const BPrepOperator &bprep() const noexcept { return bprep_; }

    [[nodiscard]] CVector apply_matrix(const CVector &x) const;

    [[nodiscard]] CostReport evaluate(CostKind kind, const StateVector &x) const;
    [[nodiscard]] CostReport evaluate(CostKind kind, const ParamSet &p) const;

  private:
    const LinearSystem *sys_;
    MatvecMode mode_;
    BPrepOperator bprep_;
    std::optional<PauliDecomposition> decomposition_;
};

/// C_G for state x. Throws DegenerateCostError when ⟨ψ|ψ⟩ < 1e-14.
CostReport global_cost(const LinearSystem &sys, const StateVector &x);

/// C_L for state x using the supplied b-preparation operator.
CostReport local_cost(const LinearSystem &sys, const StateVector &x, const BPrepOperator &u);

/**
 * Exact gradient of the normalized cost by the ±π/2 parameter-shift rule,
 * applied separately to Ĉ and ⟨ψ|ψ⟩ and combined by the quotient rule.
 * Returns 3q values in ParamSet row-major order.
 */
std::vector<double> cost_gradient(const CostModel &model, const ParamSet &p, CostKind kind);

struct CostWithGradient {
    CostReport cost;
    std::vector<double> gradient;
};

/// Cost at p together with its parameter-shift gradient (shares the unshifted evaluation).
CostWithGradient cost_and_gradient(const CostModel &model, const ParamSet &p, CostKind kind);

/// Convenience overload building a dense-matvec CostModel.
std::vector<double> cost_gradient(const LinearSystem &sys, const ParamSet &p, CostKind kind);

/// Central finite difference of the normalized cost with step h (> 0).
std::vector<double> finite_diff_gradient(const CostModel &model, const ParamSet &p,
                                         CostKind kind, double h);

} // namespace vqls
