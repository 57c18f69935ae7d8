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
 * Linear-system instances A x = b: generation, normalization and dataset splits.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vqls/common.hpp"

namespace vqls {

struct SystemMeta {
    std::string source = "synthetic"; ///< "synthetic" or "suitesparse:<name>"
    std::size_t original_dim = 0;     ///< dimension before power-of-two padding
    std::optional<std::uint64_t> seed;
    double density = 0.0;      ///< generator density; 0 for ingested matrices
    double rhs_scale = 1.0;    ///< factor applied to b by normalize_system
    double matrix_scale = 1.0; ///< factor applied to A by normalize_system
};

/**
 * A dense 2^q × 2^q system with a right-hand side.
 *
 * Constructed only through `make` (or the generators), which enforce
 * dim == 2^q, a nonzero matrix, and no all-zero row.
 */
class LinearSystem {
  public:
    static LinearSystem make(CMatrix matrix, CVector rhs, std::string id, SystemMeta meta = {});

    [[nodiscard]] int qubits() const noexcept { return qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(rhs_.size()); }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] const CVector &rhs() const noexcept { return rhs_; }
    [[nodiscard]] const std::string &id() const noexcept { return id_; }
    [[nodiscard]] const SystemMeta &meta() const noexcept { return meta_; }

    /// Number of nonzero matrix entries.
    [[nodiscard]] std::size_t nonzeros() const;

  private:
    LinearSystem(CMatrix matrix, CVector rhs, std::string id, SystemMeta meta, int qubits)
        : matrix_(std::move(matrix)), rhs_(std::move(rhs)), id_(std::move(id)),
          meta_(std::move(meta)), qubits_(qubits) {}

    CMatrix matrix_;
    CVector rhs_;
    std::string id_;
    SystemMeta meta_;
    int qubits_;
};

/**
 * Random real system: full diagonal in [1, 2), ceil(density·N²) distinct
 * off-diagonal entries uniform in [-1, 1) \ {0} (capped at N² - N), and
 * a unit-norm b with entries drawn from [-1, 1).
 *
 * Requires 2 <= q <= 12 and density > 0.
 */
LinearSystem gen_random_system(int qubits, double density, std::uint64_t seed,
                               std::string id = {});

/// Scales b to unit norm and A by N / ||A||_F; both factors are recorded in meta.
LinearSystem normalize_system(const LinearSystem &sys);

struct DatasetSplit {
    std::vector<std::string> train;
    std::vector<std::string> val;
    std::vector<std::string> test;
};

/// Deterministic shuffled 8:1:1 partition (floor on train, remainder to val then test).
DatasetSplit split_dataset(const std::vector<std::string> &ids, std::uint64_t seed);

/// Default instance id for generated systems, e.g. "syn_q4_s7".
std::string synthetic_id(int qubits, std::uint64_t seed);

} // namespace vqls
