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

#include "vqls/init.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <Eigen/SVD>

#include "json.hpp"
#include "vqls/random.hpp"

namespace vqls {

std::string_view to_string(StrategyTag tag) noexcept {
    switch (tag) {
    case StrategyTag::Uniform:
        return "uniform";
    case StrategyTag::Pca:
        return "pca";
    case StrategyTag::MinNorm:
        return "minnorm";
    case StrategyTag::RowMean:
        return "rowmean";
    case StrategyTag::Predicted:
        return "predicted";
    }
    return "unknown";
}

StrategyTag parse_strategy(std::string_view s) {
    for (const auto tag : {StrategyTag::Uniform, StrategyTag::Pca, StrategyTag::MinNorm,
                           StrategyTag::RowMean, StrategyTag::Predicted}) {
        if (s == to_string(tag)) {
            return tag;
        }
    }
    throw std::invalid_argument("unknown strategy '" + std::string(s) + "'");
}

ParamSet init_uniform(int qubits, std::uint64_t seed) {
    ParamSet p(qubits);
    Rng rng(seed);
    for (double &a : p.flat()) {
        a = unit_to_angle(rng.uniform01());
    }
    return p;
}

std::vector<double> affine_to_angles(std::span<const double> values) {
    std::vector<double> out(values.size(), kPi);
    if (values.empty()) {
        return out;
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double span = *hi - *lo;
    // Rounding noise from the SVD must not turn a constant vector into a ramp.
    const double scale = std::max(std::abs(*lo), std::abs(*hi));
    if (!(span > 1e-12 * scale)) {
        return out;
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
        out[k] = unit_to_angle((values[k] - *lo) / span);
    }
    return out;
}

ParamSet init_pca(const LinearSystem &sys) {
    const RMatrix re = sys.matrix().real();
    if ((re.array() == 0.0).all()) {
        throw std::invalid_argument("init_pca: Re(A) is the zero matrix");
    }
    Eigen::BDCSVD<RMatrix> svd(re, Eigen::ComputeThinV);
    RVector v = svd.matrixV().col(0);
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    if (v(arg) < 0.0) {
        v = -v;
    }
    const int q = sys.qubits();
    const std::size_t count = 3 * static_cast<std::size_t>(q);
    std::vector<double> taken(count);
    for (std::size_t k = 0; k < count; ++k) {
        taken[k] = v(static_cast<Eigen::Index>(k % static_cast<std::size_t>(v.size())));
    }
    return ParamSet(q, affine_to_angles(taken));
}

CVector pseudoinverse_solve(const CMatrix &a, const CVector &b, double rcond) {
    Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RVector &s = svd.singularValues();
    const double cutoff = s.size() > 0 ? rcond * s(0) : 0.0;
    CVector coeff = svd.matrixU().adjoint() * b;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        coeff(k) = s(k) > cutoff ? coeff(k) / s(k) : Complex{0.0, 0.0};
    }
    return svd.matrixV() * coeff;
}

ParamSet init_minnorm(const LinearSystem &sys, MinNormVariant variant) {
    CVector x = variant == MinNormVariant::Pseudoinverse
                    ? pseudoinverse_solve(sys.matrix(), sys.rhs())
                    : CVector(sys.matrix().adjoint() * sys.rhs());
    const double norm = x.norm();
    if (norm < 1e-14) {
        throw std::domain_error("init_minnorm: classical solution vanishes (b outside range of A)");
    }
    x /= norm;

    const int q = sys.qubits();
    const auto n = static_cast<std::size_t>(x.size());
    ParamSet p(q);
    for (int j = 0; j < q; ++j) {
        const std::size_t mask = std::size_t{1} << (q - 1 - j);
        double rho00 = 0.0;
        double rho11 = 0.0;
        Complex rho01{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            if (k & mask) {
                continue;
            }
            const Complex a0 = x(static_cast<Eigen::Index>(k));
            const Complex a1 = x(static_cast<Eigen::Index>(k | mask));
            rho00 += std::norm(a0);
            rho11 += std::norm(a1);
            rho01 += a0 * std::conj(a1);
        }
        // ρ = (I + r·σ)/2  ⇒  ρ01 = (r_x - i r_y)/2.
        const double rx = 2.0 * rho01.real();
        const double ry = -2.0 * rho01.imag();
        const double rz = rho00 - rho11;
        const double perp_sq = rx * rx + ry * ry;
        p(j, 0) = wrap_angle(std::atan2(std::sqrt(perp_sq), rz));
        p(j, 1) = perp_sq < 1e-20 ? 0.0 : wrap_angle(std::atan2(ry, rx));
        p(j, 2) = 0.0;
    }
    return p;
}

ParamSet init_rowmean(const LinearSystem &sys) {
    const RMatrix re = sys.matrix().real();
    const RVector means = re.rowwise().mean();
    const int q = sys.qubits();
    const std::size_t blocks = 3 * static_cast<std::size_t>(q);
    const auto n = static_cast<std::size_t>(means.size());

    // Block k covers [k·N/B, (k+1)·N/B); when N < B a block falls back to its first index.
    std::vector<double> averages(blocks);
    for (std::size_t k = 0; k < blocks; ++k) {
        const std::size_t begin = k * n / blocks;
        const std::size_t end = std::max(begin + 1, (k + 1) * n / blocks);
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            sum += means(static_cast<Eigen::Index>(i));
        }
        averages[k] = sum / static_cast<double>(end - begin);
    }
    return ParamSet(q, affine_to_angles(averages));
}

namespace {

ParamSet parse_prediction(const nlohmann::json &j, std::size_t line, std::string &id) {
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
        throw ParseError("record needs a string 'id'", line);
    }
    id = j["id"].get<std::string>();
    if (!j.contains("qubits") || !j["qubits"].is_number_integer()) {
        throw ParseError("record '" + id + "' needs an integer 'qubits'", line);
    }
    const int q = j["qubits"].get<int>();
    if (q < 1 || q > kMaxQubits) {
        throw ParseError("record '" + id + "': qubits out of range", line);
    }
    const auto &params = j.contains("params") ? j["params"] : nlohmann::json();
    if (!params.is_array() || params.size() != static_cast<std::size_t>(q)) {
        throw ParseError("record '" + id + "': shape mismatch (params must be " +
                             std::to_string(q) + "x3)",
                         line);
    }
    std::vector<double> angles;
    angles.reserve(3 * static_cast<std::size_t>(q));
    for (const auto &row : params) {
        if (!row.is_array() || row.size() != 3) {
            throw ParseError("record '" + id + "': shape mismatch (rows must have 3 angles)", line);
        }
        for (const auto &v : row) {
            if (!v.is_number()) {
                throw ParseError("record '" + id + "': non-numeric angle", line);
            }
            const double a = v.get<double>();
            if (!std::isfinite(a)) {
                throw ParseError("record '" + id + "': non-finite angle", line);
            }
            angles.push_back(wrap_angle(a));
        }
    }
    return ParamSet(q, std::move(angles));
}

} // namespace

PredictionSet PredictionSet::load(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open predictions file " + path.string());
    }
    PredictionSet out;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception &e) {
            throw ParseError(std::string("malformed JSON: ") + e.what(), line);
        }
        std::string id;
        ParamSet p = parse_prediction(j, line, id);
        if (!out.params_.emplace(id, std::move(p)).second) {
            throw ParseError("duplicate id '" + id + "'", line);
        }
    }
    return out;
}

const ParamSet &PredictionSet::at(const std::string &id) const {
    const auto it = params_.find(id);
    if (it == params_.end()) {
        throw std::out_of_range("no prediction for instance '" + id + "'");
    }
    return it->second;
}

ParamSet load_predicted(const std::filesystem::path &path, const std::string &instance_id) {
    return PredictionSet::load(path).at(instance_id);
}

} // namespace vqls
