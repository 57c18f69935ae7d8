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
 * Pauli-string expansion A = Σ c_l P_l of a 2^q × 2^q matrix.
 *
 * Qubit 0 is the leftmost label character and the most significant bit of
 * a basis-state index, i.e. label "ZX" is the Kronecker product Z ⊗ X.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vqls/common.hpp"

namespace vqls {

class PauliString {
  public:
    /// Parses a label over {I, X, Y, Z}; throws std::invalid_argument otherwise.
    explicit PauliString(std::string_view label);

    /// Builds the string from per-bit masks over `qubits` qubits.
    static PauliString from_masks(int qubits, std::uint64_t x_mask, std::uint64_t z_mask);

    [[nodiscard]] const std::string &label() const noexcept { return label_; }
    [[nodiscard]] int qubits() const noexcept { return static_cast<int>(label_.size()); }
    [[nodiscard]] std::uint64_t x_mask() const noexcept { return x_mask_; }
    [[nodiscard]] std::uint64_t z_mask() const noexcept { return z_mask_; }
    [[nodiscard]] int y_count() const noexcept { return y_count_; }

    /// Phase picked up by basis state k: (P e_k) = phase(k) · e_{k ^ x_mask}.
    [[nodiscard]] Complex phase(std::uint64_t k) const noexcept;

    friend bool operator==(const PauliString &a, const PauliString &b) {
        return a.label_ == b.label_;
    }
    friend auto operator<=>(const PauliString &a, const PauliString &b) {
        return a.label_ <=> b.label_;
    }

  private:
    std::string label_;
    std::uint64_t x_mask_ = 0;
    std::uint64_t z_mask_ = 0;
    int y_count_ = 0;
};

struct PauliTerm {
    Complex coeff;
    PauliString string;
};

/// Default magnitude below which coefficients are dropped.
inline constexpr double kPauliPruneTol = 1e-12;

/**
 * A validated set of Pauli terms: all strings have `qubits` characters and
 * are pairwise distinct. Terms are kept sorted by label.
 */
class PauliDecomposition {
  public:
    PauliDecomposition(int qubits, std::vector<PauliTerm> terms);

    [[nodiscard]] int qubits() const noexcept { return qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return std::size_t{1} << qubits_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  private:
    int qubits_;
    std::vector<PauliTerm> terms_;
};

/**
 * Computes c_P = Tr(P A) / N for every Pauli string with |c_P| > tol.
 *
 * Runs an in-place butterfly over (row bit, column bit) pairs per qubit,
 * O(N² log N) time and O(N²) memory.
 */
PauliDecomposition decompose(const CMatrix &a, double tol = kPauliPruneTol);

/// Dense Σ c_l P_l.
CMatrix reconstruct(const PauliDecomposition &d);

/// P v in O(N).
CVector apply_term(const PauliString &s, const CVector &v);

/// Σ c_l P_l v, accumulated in term order.
CVector apply_decomposition(const PauliDecomposition &d, const CVector &v);

/// JSON export: {"qubits": q, "terms": [[re, im, "label"], ...]} sorted by label.
std::string decomposition_to_json(const PauliDecomposition &d);

} // namespace vqls
