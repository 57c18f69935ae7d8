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

#include "vqls/graphenc.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace vqls {

int SignedEdge::sign() const noexcept {
    if (weight.real() != 0.0) {
        return weight.real() > 0.0 ? 1 : -1;
    }
    return weight.imag() >= 0.0 ? 1 : -1;
}

std::size_t SignedDirectedGraph::positive_edges() const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [](const SignedEdge &e) { return e.sign() > 0; }));
}

std::size_t SignedDirectedGraph::negative_edges() const {
    return edges.size() - positive_edges();
}

SignedDirectedGraph encode(const LinearSystem &sys) {
    SignedDirectedGraph g;
    const auto n = static_cast<Eigen::Index>(sys.dim());
    g.nodes.reserve(sys.dim());
    for (Eigen::Index i = 0; i < n; ++i) {
        g.nodes.push_back(sys.rhs()(i));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const Complex a = sys.matrix()(i, j);
            if (a != Complex{0.0, 0.0}) {
                g.edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), a});
            }
        }
    }
    return g;
}

std::pair<CMatrix, CVector> decode_structure(const SignedDirectedGraph &g, std::size_t dim) {
    if (g.nodes.size() != dim) {
        throw std::invalid_argument("decode_structure: node count does not match dim");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    CMatrix a = CMatrix::Zero(n, n);
    CVector b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        b(i) = g.nodes[static_cast<std::size_t>(i)];
    }
    for (const auto &e : g.edges) {
        if (e.src >= dim || e.dst >= dim) {
            throw std::out_of_range("decode_structure: edge (" + std::to_string(e.src) + ", " +
                                    std::to_string(e.dst) + ") outside dimension " +
                                    std::to_string(dim));
        }
        a(static_cast<Eigen::Index>(e.src), static_cast<Eigen::Index>(e.dst)) = e.weight;
    }
    return {std::move(a), std::move(b)};
}

DatasetRecord make_record(const LinearSystem &sys, const std::optional<ParamSet> &label,
                          nlohmann::json meta) {
    DatasetRecord r;
    r.id = sys.id();
    r.qubits = sys.qubits();
    r.graph = encode(sys);
    if (label) {
        if (label->qubits() != sys.qubits()) {
            throw std::invalid_argument("label qubit count does not match the system");
        }
        r.label.emplace(label->flat().begin(), label->flat().end());
    }
    r.meta = std::move(meta);
    return r;
}

std::string record_to_line(const DatasetRecord &r) {
    using nlohmann::json;
    json nodes = json::array();
    for (const Complex &v : r.graph.nodes) {
        nodes.push_back({v.real(), v.imag()});
    }
    std::vector<SignedEdge> edges = r.graph.edges;
    std::sort(edges.begin(), edges.end(), [](const SignedEdge &a, const SignedEdge &b) {
        return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
    });
    json jedges = json::array();
    for (const auto &e : edges) {
        jedges.push_back({e.src, e.dst, e.weight.real(), e.weight.imag()});
    }
    // ordered_json keeps a fixed, human-friendly key order in the output.
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["qubits"] = r.qubits;
    j["nodes"] = std::move(nodes);
    j["edges"] = std::move(jedges);
    j["label"] = r.label ? nlohmann::ordered_json(*r.label) : nlohmann::ordered_json(nullptr);
    j["meta"] = r.meta;
    return j.dump();
}

namespace {

Complex read_pair(const nlohmann::json &v, std::size_t line) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ParseError("expected [re, im]", line);
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

} // namespace

DatasetRecord record_from_line(const std::string &line, std::size_t line_number) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), line_number);
    }
    if (!j.is_object()) {
        throw ParseError("record must be a JSON object", line_number);
    }
    DatasetRecord r;
    try {
        r.id = j.at("id").get<std::string>();
        r.qubits = j.at("qubits").get<int>();
        for (const auto &v : j.at("nodes")) {
            r.graph.nodes.push_back(read_pair(v, line_number));
        }
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 4) {
                throw ParseError("edge must be [i, j, re, im]", line_number);
            }
            r.graph.edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(),
                                     Complex{e[2].get<double>(), e[3].get<double>()}});
        }
        const auto &label = j.at("label");
        if (!label.is_null()) {
            r.label = label.get<std::vector<double>>();
            if (r.label->size() != 3 * static_cast<std::size_t>(r.qubits)) {
                throw ParseError("label must hold 3*qubits angles", line_number);
            }
        }
        if (j.contains("meta")) {
            r.meta = j["meta"];
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("bad record field: ") + e.what(), line_number);
    }
    if (r.graph.nodes.size() != (std::size_t{1} << r.qubits)) {
        throw ParseError("node count must be 2^qubits", line_number);
    }
    return r;
}

void export_dataset(const std::vector<DatasetRecord> &records, const std::filesystem::path &path) {
    std::set<std::string> ids;
    for (const auto &r : records) {
        if (!ids.insert(r.id).second) {
            throw std::invalid_argument("export_dataset: duplicate id '" + r.id + "'");
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    for (const auto &r : records) {
        out << record_to_line(r) << '\n';
    }
}

std::vector<DatasetRecord> import_dataset(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<DatasetRecord> out;
    std::set<std::string> ids;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        DatasetRecord r = record_from_line(line, number);
        if (!ids.insert(r.id).second) {
            throw ParseError("duplicate id '" + r.id + "'", number);
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace vqls
