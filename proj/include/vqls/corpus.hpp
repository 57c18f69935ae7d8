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
 * On-disk instance corpus: one directory per instance (matrix.mtx,
 * rhs.json, meta.json) plus a manifest.json holding the split and labels.
 */
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vqls/driver.hpp"
#include "vqls/problem.hpp"

namespace vqls {

/// Version string stamped into every artifact.
std::string version_string();

/// FNV-1a hash of an id, used to derive per-instance seeds.
std::uint64_t id_hash(const std::string &id) noexcept;

nlohmann::json meta_to_json(const LinearSystem &sys);

/// Writes dir/matrix.mtx, dir/rhs.json and dir/meta.json; `extra` is merged into meta.json.
void save_instance(const std::filesystem::path &dir, const LinearSystem &sys,
                   const nlohmann::json &extra = nlohmann::json::object());

/// Reads an instance directory back without re-normalizing b.
LinearSystem load_instance(const std::filesystem::path &dir);

struct LabelEntry {
    std::vector<double> params; ///< 3q angles, row-major, unwrapped
    double final_cost = 0.0;
    double initial_cost = 0.0;
    bool converged = false;
    std::optional<int> steps;
    int restarts = 0;
    std::vector<double> restart_final_costs;
};

struct ManifestInstance {
    std::string id;
    int qubits = 0;
    std::string dir; ///< relative to the corpus root
};

struct Manifest {
    std::string version;
    nlohmann::json config;
    std::vector<ManifestInstance> instances;
    DatasetSplit split;
    std::map<std::string, LabelEntry> labels;
    nlohmann::json label_config;

    [[nodiscard]] std::string split_of(const std::string &id) const;

    static Manifest load(const std::filesystem::path &corpus);
    void save(const std::filesystem::path &corpus) const;
};

} // namespace vqls
