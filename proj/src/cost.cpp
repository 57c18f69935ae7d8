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

#include "vqls/cost.hpp"

#include <bit>
#include <cmath>

namespace vqls {

std::string_view to_string(CostKind kind) noexcept {
    return kind == CostKind::Global ? "global" : "local";
}

CostKind parse_cost_kind(std::string_view s) {
    if (s == "global") {
        return CostKind::Global;
    }
    if (s == "local") {
        return CostKind::Local;
    }
    throw std::invalid_argument("unknown cost kind '" + std::string(s) + "'");
}

namespace {

double norm_sq_checked(const CVector &psi) {
    const double d = psi.squaredNorm();
    if (!(d >= kDegenerateNormSq)) {
        throw DegenerateCostError("degenerate cost: <psi|psi> = " + std::to_string(d) +
                                  " (A annihilates x)");
    }
    return d;
}

// ||ψ - b⟨b|ψ⟩||² equals ⟨ψ|ψ⟩ - |⟨b|ψ⟩|² for unit b and is never negative.
CostReport global_from_psi(const CVector &psi, const CVector &b) {
    const double d = norm_sq_checked(psi);
    const Complex overlap = b.dot(psi);
    const double raw = (psi - overlap * b).squaredNorm();
    return {CostKind::Global, raw, raw / d, d};
}

// Ĉ_L = (1/q) Σ_j Σ_{k: qubit j of k is 1} |φ_k|², the complement of the Π_j weights.
CostReport local_from_phi(const CVector &phi, int qubits, double d) {
    const auto n = static_cast<std::size_t>(phi.size());
    double excited = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double w = std::norm(phi(static_cast<Eigen::Index>(k)));
        excited += w * static_cast<double>(std::popcount(k));
    }
    const double raw = excited / qubits;
    return {CostKind::Local, raw, raw / d, d};
}

void check_dims(const LinearSystem &sys, const StateVector &x) {
    if (x.dim() != sys.dim()) {
        throw std::invalid_argument("state dimension does not match the system");
    }
}

} // namespace

CostReport global_cost(const LinearSystem &sys, const StateVector &x) {
    check_dims(sys, x);
    return global_from_psi(sys.matrix() * x.amplitudes(), sys.rhs());
}

CostReport local_cost(const LinearSystem &sys, const StateVector &x, const BPrepOperator &u) {
    check_dims(sys, x);
    if (u.qubits() != sys.qubits()) {
        throw std::invalid_argument("b-preparation operator has the wrong qubit count");
    }
    const CVector psi = sys.matrix() * x.amplitudes();
    const double d = norm_sq_checked(psi);
    return local_from_phi(apply_bprep_adjoint(u, psi), sys.qubits(), d);
}

CostModel::CostModel(const LinearSystem &sys, MatvecMode mode)
    : sys_(&sys), mode_(mode), bprep_(build_bprep(sys.rhs())) {
    if (mode_ == MatvecMode::Pauli) {
        decomposition_ = decompose(sys.matrix());
    }
}

CVector CostModel::apply_matrix(const CVector &x) const {
    if (mode_ == MatvecMode::Pauli) {
        return apply_decomposition(*decomposition_, x);
    }
    return sys_->matrix() * x;
}

CostReport CostModel::evaluate(CostKind kind, const StateVector &x) const {
    check_dims(*sys_, x);
    const CVector psi = apply_matrix(x.amplitudes());
    if (kind == CostKind::Global) {
        return global_from_psi(psi, sys_->rhs());
    }
    const double d = norm_sq_checked(psi);
    return local_from_phi(apply_bprep_adjoint(bprep_, psi), sys_->qubits(), d);
}

CostReport CostModel::evaluate(CostKind kind, const ParamSet &p) const {
    if (p.qubits() != sys_->qubits()) {
        throw std::invalid_argument("ParamSet qubit count does not match the system");
    }
    return evaluate(kind, ansatz_state(p));
}

CostWithGradient cost_and_gradient(const CostModel &model, const ParamSet &p, CostKind kind) {
    CostWithGradient out;
    out.cost = model.evaluate(kind, p);
    const double num = out.cost.raw;
    const double den = out.cost.psi_norm_sq;
    out.gradient.resize(p.size());

    ParamSet shifted = p;
    auto flat = shifted.flat();
    for (std::size_t k = 0; k < flat.size(); ++k) {
        const double saved = flat[k];
        flat[k] = saved + kPi / 2;
        const CostReport plus = model.evaluate(kind, shifted);
        flat[k] = saved - kPi / 2;
        const CostReport minus = model.evaluate(kind, shifted);
        flat[k] = saved;

        const double d_num = 0.5 * (plus.raw - minus.raw);
        const double d_den = 0.5 * (plus.psi_norm_sq - minus.psi_norm_sq);
        out.gradient[k] = (d_num * den - num * d_den) / (den * den);
    }
    return out;
}

std::vector<double> cost_gradient(const CostModel &model, const ParamSet &p, CostKind kind) {
    return cost_and_gradient(model, p, kind).gradient;
}

std::vector<double> cost_gradient(const LinearSystem &sys, const ParamSet &p, CostKind kind) {
    return cost_gradient(CostModel(sys), p, kind);
}

std::vector<double> finite_diff_gradient(const CostModel &model, const ParamSet &p,
                                         CostKind kind, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    std::vector<double> g(p.size());
    ParamSet shifted = p;
    auto flat = shifted.flat();
    for (std::size_t k = 0; k < flat.size(); ++k) {
        const double saved = flat[k];
        flat[k] = saved + h;
        const double plus = model.evaluate(kind, shifted).normalized;
        flat[k] = saved - h;
        const double minus = model.evaluate(kind, shifted).normalized;
        flat[k] = saved;
        g[k] = (plus - minus) / (2 * h);
    }
    return g;
}

} // namespace vqls
