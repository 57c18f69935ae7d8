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
 * Signed directed graph view of a linear system and the dataset JSONL
 * consumed by the graph-learning component.
 *
 * Node i carries b_i; every nonzero a_ij becomes one edge i → j whose
 * signed weight is a_ij itself (sign = adjacency entry g_ij, magnitude =
 * edge weight). Complex entries are classified by the sign of Re, falling
 * back to the sign of Im when Re = 0.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vqls/problem.hpp"
#include "vqls/simulator.hpp"

namespace vqls {

struct SignedEdge {
    std::size_t src = 0;
    std::size_t dst = 0;
    Complex weight; ///< the matrix entry a_src,dst

    /// +1 or -1.
    [[nodiscard]] int sign() const noexcept;
    [[nodiscard]] double magnitude() const noexcept { return std::abs(weight); }

    friend bool operator==(const SignedEdge &, const SignedEdge &) = default;
};

struct SignedDirectedGraph {
    std::vector<Complex> nodes;     ///< feature b_i per node
    std::vector<SignedEdge> edges;  ///< sorted by (src, dst)

    [[nodiscard]] std::size_t positive_edges() const;
    [[nodiscard]] std::size_t negative_edges() const;

    friend bool operator==(const SignedDirectedGraph &, const SignedDirectedGraph &) = default;
};

SignedDirectedGraph encode(const LinearSystem &sys);

/// Inverse of encode on (A, b); throws std::out_of_range when an edge index >= dim.
std::pair<CMatrix, CVector> decode_structure(const SignedDirectedGraph &g, std::size_t dim);

struct DatasetRecord {
    std::string id;
    int qubits = 0;
    SignedDirectedGraph graph;
    std::optional<std::vector<double>> label; ///< 3q angles, row-major
    nlohmann::json meta = nlohmann::json::object();

    friend bool operator==(const DatasetRecord &, const DatasetRecord &) = default;
};

/// Builds a record for sys with an optional label.
DatasetRecord make_record(const LinearSystem &sys, const std::optional<ParamSet> &label,
                          nlohmann::json meta = nlohmann::json::object());

/// One JSON line (no trailing newline).
std::string record_to_line(const DatasetRecord &r);
DatasetRecord record_from_line(const std::string &line, std::size_t line_number);

void export_dataset(const std::vector<DatasetRecord> &records, const std::filesystem::path &path);

/// Throws ParseError on a malformed line (1-based) or a duplicate id.
std::vector<DatasetRecord> import_dataset(const std::filesystem::path &path);

} // namespace vqls
