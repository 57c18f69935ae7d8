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
 * Initial-parameter strategies: uniform random, PCA, minimum norm, row mean,
 * and externally predicted angles.
 *
 * Every strategy returns a q×3 ParamSet with angles in [0, 2π).
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "vqls/problem.hpp"
#include "vqls/simulator.hpp"

namespace vqls {

enum class StrategyTag { Uniform, Pca, MinNorm, RowMean, Predicted };

/// Output tag, e.g. "minnorm"; identical to the CLI spelling.
std::string_view to_string(StrategyTag tag) noexcept;
StrategyTag parse_strategy(std::string_view s);

/// Each angle i.i.d. uniform in [0, 2π); deterministic in seed.
ParamSet init_uniform(int qubits, std::uint64_t seed);

/**
 * Top right singular vector v of Re(A) (largest-magnitude entry made
 * positive); the first 3q entries (cycled when N < 3q) are mapped affinely
 * from [min, max] onto [0, 2π) and reshaped row-major.
 */
ParamSet init_pca(const LinearSystem &sys);

enum class MinNormVariant {
    Pseudoinverse,     ///< x* = A⁺ b
    ConjugateTranspose ///< x* = A† b
};

/**
 * Fits per-qubit Bloch angles to the normalized classical solution x*:
 * angles[j] = (θ_j, φ_j, 0) from the reduced state of qubit j. Throws
 * std::domain_error when ||x*|| < 1e-14.
 */
ParamSet init_minnorm(const LinearSystem &sys,
                      MinNormVariant variant = MinNormVariant::Pseudoinverse);

/// Row means of Re(A), averaged over 3q contiguous blocks and mapped affinely onto [0, 2π).
ParamSet init_rowmean(const LinearSystem &sys);

/// Affine map [min, max] → [0, 2π); a constant input maps to π everywhere.
std::vector<double> affine_to_angles(std::span<const double> values);

/// Moore–Penrose pseudoinverse solution with singular values below rcond·σ_max dropped.
CVector pseudoinverse_solve(const CMatrix &a, const CVector &b, double rcond = 1e-10);

/**
 * Predictions file (JSON Lines): {"id": str, "qubits": int, "params": [[f, f, f] × q]}.
 * Angles are reduced mod 2π on load.
 */
class PredictionSet {
  public:
    static PredictionSet load(const std::filesystem::path &path);

    [[nodiscard]] bool contains(const std::string &id) const { return params_.contains(id); }
    /// Throws std::out_of_range for an unknown id.
    [[nodiscard]] const ParamSet &at(const std::string &id) const;
    [[nodiscard]] std::size_t size() const noexcept { return params_.size(); }
    [[nodiscard]] const std::map<std::string, ParamSet> &entries() const noexcept { return params_; }

  private:
    std::map<std::string, ParamSet> params_;
};

/// Loads the prediction for one instance id.
ParamSet load_predicted(const std::filesystem::path &path, const std::string &instance_id);

} // namespace vqls
