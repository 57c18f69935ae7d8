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
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "vqls/problem.hpp"

namespace vqls {

/// Raw square matrix as read from a Matrix Market file, before padding.
struct MarketMatrix {
    CMatrix values;
    bool complex_field = false;
};

/**
 * Parses Matrix Market text (coordinate or array; real, integer, complex or
 * pattern; general, symmetric, skew-symmetric or hermitian). Symmetric
 * storage is expanded to the full matrix; repeated coordinates are summed.
 *
 * Throws ParseError with the offending 1-based line number.
 */
MarketMatrix parse_matrix_market(std::istream &in);

struct RhsOnes {};
struct RhsRandom {
    std::uint64_t seed = 0;
};
struct RhsFile {
    std::filesystem::path path; ///< JSON array of [re, im] pairs
};
using RhsPolicy = std::variant<RhsOnes, RhsRandom, RhsFile>;

/**
 * Loads a Matrix Market file into the smallest enclosing 2^q system.
 *
 * Extra diagonal entries are 1, extra off-diagonals 0, and padded entries
 * of b are 0; b is then unit-normalized. Rejects zero rows of the original
 * matrix and padded dimensions beyond 2^12.
 */
LinearSystem load_matrix_market(const std::filesystem::path &path, const RhsPolicy &policy,
                                std::string id = {});

/// Embeds an n×n matrix into the enclosing power-of-two dimension (identity padding).
CMatrix pad_to_power_of_two(const CMatrix &m);

/// Writes A as "coordinate real general" (or complex when any entry has Im ≠ 0), %.17g.
void write_matrix_market(std::ostream &out, const CMatrix &m);
void write_matrix_market(const std::filesystem::path &path, const CMatrix &m);

} // namespace vqls
