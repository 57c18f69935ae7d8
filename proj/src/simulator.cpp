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

#include "vqls/simulator.hpp"

#include <cmath>

#include "json.hpp"

namespace vqls {

namespace {

constexpr double kUnitNormTol = 1e-10;

void check_qubits(int qubits) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must lie in [1, 12]");
    }
}

void check_index(const StateVector &v, int qubit) {
    if (qubit < 0 || qubit >= v.qubits()) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
    }
}

} // namespace

StateVector::StateVector(int qubits, CVector amplitudes)
    : qubits_(qubits), amps_(std::move(amplitudes)) {
    check_qubits(qubits);
    if (amps_.size() != (Eigen::Index{1} << qubits)) {
        throw std::invalid_argument("state length must be 2^qubits");
    }
    if (std::abs(amps_.norm() - 1.0) > kUnitNormTol) {
        throw std::invalid_argument("state is not unit-norm");
    }
}

std::string to_json(const StateVector &v) {
    nlohmann::json j = nlohmann::json::array();
    for (const Complex &a : v.amplitudes()) {
        j.push_back({a.real(), a.imag()});
    }
    return j.dump();
}

ParamSet::ParamSet(int qubits) : ParamSet(qubits, std::vector<double>(3 * static_cast<std::size_t>(qubits), 0.0)) {}

ParamSet::ParamSet(int qubits, std::vector<double> angles)
    : qubits_(qubits), angles_(std::move(angles)) {
    check_qubits(qubits);
    if (angles_.size() != 3 * static_cast<std::size_t>(qubits)) {
        throw std::invalid_argument("ParamSet needs exactly 3 angles per qubit");
    }
    for (const double a : angles_) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("ParamSet angles must be finite");
        }
    }
}

StateVector prepare_zero(int qubits) {
    check_qubits(qubits);
    CVector amps = CVector::Zero(Eigen::Index{1} << qubits);
    amps(0) = 1.0;
    return StateVector(qubits, std::move(amps));
}

void apply_ry(StateVector &v, int qubit, double theta) {
    check_index(v, qubit);
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const std::size_t mask = v.qubit_mask(qubit);
    auto &a = v.amplitudes();
    const std::size_t n = v.dim();
    for (std::size_t k = 0; k < n; ++k) {
        if (k & mask) {
            continue;
        }
        const auto i0 = static_cast<Eigen::Index>(k);
        const auto i1 = static_cast<Eigen::Index>(k | mask);
        const Complex a0 = a(i0);
        const Complex a1 = a(i1);
        a(i0) = c * a0 - s * a1;
        a(i1) = s * a0 + c * a1;
    }
}

void apply_rz(StateVector &v, int qubit, double theta) {
    check_index(v, qubit);
    const Complex lo = std::polar(1.0, -theta / 2);
    const Complex hi = std::polar(1.0, theta / 2);
    const std::size_t mask = v.qubit_mask(qubit);
    auto &a = v.amplitudes();
    const std::size_t n = v.dim();
    for (std::size_t k = 0; k < n; ++k) {
        a(static_cast<Eigen::Index>(k)) *= (k & mask) ? hi : lo;
    }
}

void apply_cz(StateVector &v, int a, int b) {
    check_index(v, a);
    check_index(v, b);
    if (a == b) {
        throw std::invalid_argument("CZ needs two distinct qubits");
    }
    const std::size_t both = v.qubit_mask(a) | v.qubit_mask(b);
    auto &amps = v.amplitudes();
    const std::size_t n = v.dim();
    for (std::size_t k = 0; k < n; ++k) {
        if ((k & both) == both) {
            amps(static_cast<Eigen::Index>(k)) = -amps(static_cast<Eigen::Index>(k));
        }
    }
}

void apply_cz_ring(StateVector &v) {
    const int q = v.qubits();
    if (q == 2) {
        apply_cz(v, 0, 1);
        return;
    }
    for (int j = 0; q > 2 && j < q; ++j) {
        apply_cz(v, j, (j + 1) % q);
    }
}

StateVector ansatz_state(const ParamSet &p) {
    StateVector v = prepare_zero(p.qubits());
    const int q = p.qubits();
    for (int j = 0; j < q; ++j) {
        apply_ry(v, j, p(j, 0));
    }
    apply_cz_ring(v);
    for (int j = 0; j < q; ++j) {
        apply_rz(v, j, p(j, 1));
    }
    apply_cz_ring(v);
    for (int j = 0; j < q; ++j) {
        apply_ry(v, j, p(j, 2));
    }
    return v;
}

BPrepOperator build_bprep(const CVector &b) {
    const auto n = static_cast<std::size_t>(b.size());
    if (!is_power_of_two(n) || n < 2) {
        throw std::invalid_argument("build_bprep: length must be a power of two >= 2");
    }
    if (std::abs(b.norm() - 1.0) > kUnitNormTol) {
        throw std::invalid_argument("build_bprep: b is not unit-norm");
    }
    BPrepOperator u;
    u.qubits_ = log2_exact(n);
    const double phi = std::abs(b(0)) > 0.0 ? std::arg(b(0)) : 0.0;
    u.phase_ = std::polar(1.0, phi);

    CVector rotated = b * std::conj(u.phase_);
    rotated(0) = Complex{rotated(0).real(), 0.0};
    CVector diff = -rotated;
    diff(0) += 1.0;
    const double dnorm = diff.norm();
    if (dnorm <= 1e-15) {
        u.identity_ = true;
    } else {
        u.identity_ = false;
        u.w_ = diff / dnorm;
    }

    CVector e0 = CVector::Zero(b.size());
    e0(0) = 1.0;
    if ((apply_bprep(u, e0) - b).norm() > kUnitNormTol) {
        throw std::runtime_error("build_bprep: U_b|0> does not reproduce b");
    }
    return u;
}

CVector apply_bprep(const BPrepOperator &u, const CVector &v) {
    if (v.size() != (Eigen::Index{1} << u.qubits())) {
        throw std::invalid_argument("apply_bprep: dimension mismatch");
    }
    if (u.is_identity()) {
        return u.phase() * v;
    }
    const CVector &w = u.reflector();
    const Complex overlap = w.dot(v); // w† v
    return u.phase() * (v - 2.0 * overlap * w);
}

CVector apply_bprep_adjoint(const BPrepOperator &u, const CVector &v) {
    if (v.size() != (Eigen::Index{1} << u.qubits())) {
        throw std::invalid_argument("apply_bprep_adjoint: dimension mismatch");
    }
    if (u.is_identity()) {
        return std::conj(u.phase()) * v;
    }
    const CVector &w = u.reflector();
    const Complex overlap = w.dot(v);
    return std::conj(u.phase()) * (v - 2.0 * overlap * w);
}

} // namespace vqls
