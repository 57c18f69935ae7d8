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

#include "vqls/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "vqls/matrix_market.hpp"

#ifndef VQLS_VERSION
#define VQLS_VERSION "0.1.0"
#endif

namespace vqls {

namespace fs = std::filesystem;
using nlohmann::json;

std::string version_string() { return VQLS_VERSION; }

std::uint64_t id_hash(const std::string &id) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : id) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

json read_json(const fs::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    }
}

void write_json(const fs::path &path, const json &j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
}

// NaN is not representable in JSON; failed restarts are written as null.
json nullable(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

} // namespace

json meta_to_json(const LinearSystem &sys) {
    const SystemMeta &m = sys.meta();
    json j;
    j["id"] = sys.id();
    j["qubits"] = sys.qubits();
    j["source"] = m.source;
    j["original_dim"] = m.original_dim;
    j["seed"] = m.seed ? json(*m.seed) : json(nullptr);
    j["density"] = m.density;
    j["rhs_scale"] = m.rhs_scale;
    j["matrix_scale"] = m.matrix_scale;
    return j;
}

void save_instance(const fs::path &dir, const LinearSystem &sys, const json &extra) {
    fs::create_directories(dir);
    write_matrix_market(dir / "matrix.mtx", sys.matrix());
    json rhs = json::array();
    for (const Complex &v : sys.rhs()) {
        rhs.push_back({v.real(), v.imag()});
    }
    {
        std::ofstream out(dir / "rhs.json", std::ios::binary);
        out << rhs.dump() << '\n';
    }
    json meta = meta_to_json(sys);
    meta.update(extra);
    write_json(dir / "meta.json", meta);
}

LinearSystem load_instance(const fs::path &dir) {
    std::ifstream in(dir / "matrix.mtx");
    if (!in) {
        throw std::runtime_error("cannot open " + (dir / "matrix.mtx").string());
    }
    CMatrix a = parse_matrix_market(in).values;
    const json rhs = read_json(dir / "rhs.json");
    const json meta = read_json(dir / "meta.json");
    if (!rhs.is_array() || static_cast<Eigen::Index>(rhs.size()) != a.rows()) {
        throw ParseError((dir / "rhs.json").string() + ": length does not match matrix", 0);
    }
    CVector b(a.rows());
    for (std::size_t k = 0; k < rhs.size(); ++k) {
        b(static_cast<Eigen::Index>(k)) = Complex{rhs[k].at(0).get<double>(), rhs[k].at(1).get<double>()};
    }
    SystemMeta m;
    m.source = meta.value("source", std::string("synthetic"));
    m.original_dim = meta.value("original_dim", static_cast<std::size_t>(a.rows()));
    if (meta.contains("seed") && !meta["seed"].is_null()) {
        m.seed = meta["seed"].get<std::uint64_t>();
    }
    m.density = meta.value("density", 0.0);
    m.rhs_scale = meta.value("rhs_scale", 1.0);
    m.matrix_scale = meta.value("matrix_scale", 1.0);
    const std::string id = meta.value("id", dir.filename().string());
    return LinearSystem::make(std::move(a), std::move(b), id, std::move(m));
}

std::string Manifest::split_of(const std::string &id) const {
    const auto has = [&](const std::vector<std::string> &v) {
        return std::find(v.begin(), v.end(), id) != v.end();
    };
    if (has(split.train)) {
        return "train";
    }
    if (has(split.val)) {
        return "val";
    }
    if (has(split.test)) {
        return "test";
    }
    return "none";
}

Manifest Manifest::load(const fs::path &corpus) {
    const json j = read_json(corpus / "manifest.json");
    Manifest m;
    try {
        m.version = j.value("version", std::string());
        m.config = j.value("config", json::object());
        for (const auto &inst : j.at("instances")) {
            m.instances.push_back({inst.at("id").get<std::string>(), inst.at("qubits").get<int>(),
                                   inst.at("dir").get<std::string>()});
        }
        const auto &split = j.at("split");
        m.split.train = split.at("train").get<std::vector<std::string>>();
        m.split.val = split.at("val").get<std::vector<std::string>>();
        m.split.test = split.at("test").get<std::vector<std::string>>();
        if (j.contains("labels")) {
            for (const auto &[id, e] : j["labels"].items()) {
                LabelEntry l;
                l.params = e.at("params").get<std::vector<double>>();
                l.final_cost = e.at("final_cost").get<double>();
                l.initial_cost = e.at("initial_cost").get<double>();
                l.converged = e.at("converged").get<bool>();
                if (!e.at("steps").is_null()) {
                    l.steps = e["steps"].get<int>();
                }
                l.restarts = e.at("restarts").get<int>();
                for (const auto &c : e.at("restart_final_costs")) {
                    l.restart_final_costs.push_back(c.is_null() ? std::nan("") : c.get<double>());
                }
                m.labels.emplace(id, std::move(l));
            }
        }
        m.label_config = j.value("label_config", json(nullptr));
    } catch (const json::exception &e) {
        throw ParseError("manifest.json: " + std::string(e.what()), 0);
    }
    return m;
}

void Manifest::save(const fs::path &corpus) const {
    json j;
    j["version"] = version;
    j["config"] = config;
    json insts = json::array();
    for (const auto &i : instances) {
        insts.push_back({{"id", i.id}, {"qubits", i.qubits}, {"dir", i.dir}});
    }
    j["instances"] = std::move(insts);
    j["split"] = {{"train", split.train}, {"val", split.val}, {"test", split.test}};
    json labs = json::object();
    for (const auto &[id, l] : labels) {
        json costs = json::array();
        for (const double c : l.restart_final_costs) {
            costs.push_back(nullable(c));
        }
        labs[id] = {{"params", l.params},
                    {"final_cost", l.final_cost},
                    {"initial_cost", l.initial_cost},
                    {"converged", l.converged},
                    {"steps", l.steps ? json(*l.steps) : json(nullptr)},
                    {"restarts", l.restarts},
                    {"restart_final_costs", std::move(costs)}};
    }
    j["labels"] = std::move(labs);
    j["label_config"] = label_config;
    const fs::path tmp = corpus / "manifest.json.tmp";
    write_json(tmp, j);
    fs::rename(tmp, corpus / "manifest.json");
}

} // namespace vqls
