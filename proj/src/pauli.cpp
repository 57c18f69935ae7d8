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

#include "vqls/pauli.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

namespace vqls {

PauliString::PauliString(std::string_view label) : label_(label) {
    const int q = static_cast<int>(label.size());
    if (q < 1 || q > kMaxQubits) {
        throw std::invalid_argument("Pauli label length must lie in [1, 12]");
    }
    for (int j = 0; j < q; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << (q - 1 - j);
        switch (label[static_cast<std::size_t>(j)]) {
        case 'I':
            break;
        case 'X':
            x_mask_ |= bit;
            break;
        case 'Y':
            x_mask_ |= bit;
            z_mask_ |= bit;
            ++y_count_;
            break;
        case 'Z':
            z_mask_ |= bit;
            break;
        default:
            throw std::invalid_argument("invalid Pauli label '" + std::string(label) + "'");
        }
    }
}

PauliString PauliString::from_masks(int qubits, std::uint64_t x_mask, std::uint64_t z_mask) {
    std::string label(static_cast<std::size_t>(qubits), 'I');
    for (int j = 0; j < qubits; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << (qubits - 1 - j);
        const bool x = (x_mask & bit) != 0;
        const bool z = (z_mask & bit) != 0;
        label[static_cast<std::size_t>(j)] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return PauliString(label);
}

Complex PauliString::phase(std::uint64_t k) const noexcept {
    // Y = i X Z: every Y contributes a factor i, every Z-type bit set in k a factor -1.
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const int minus = std::popcount(k & z_mask_) & 1;
    const int power = (y_count_ + 2 * minus) & 3;
    return kIPow[power];
}

PauliDecomposition::PauliDecomposition(int qubits, std::vector<PauliTerm> terms)
    : qubits_(qubits), terms_(std::move(terms)) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must lie in [1, 12]");
    }
    for (const auto &t : terms_) {
        if (t.string.qubits() != qubits) {
            throw std::invalid_argument("term '" + t.string.label() + "' has wrong length");
        }
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const PauliTerm &a, const PauliTerm &b) { return a.string < b.string; });
    const auto dup = std::adjacent_find(
        terms_.begin(), terms_.end(),
        [](const PauliTerm &a, const PauliTerm &b) { return a.string == b.string; });
    if (dup != terms_.end()) {
        throw std::invalid_argument("duplicate Pauli string '" + dup->string.label() + "'");
    }
}

PauliDecomposition decompose(const CMatrix &a, double tol) {
    const auto n = static_cast<std::size_t>(a.rows());
    if (a.rows() != a.cols() || !is_power_of_two(n) || n < 2) {
        throw std::invalid_argument("decompose: matrix must be square with power-of-two size >= 2");
    }
    const int q = log2_exact(n);
    if (q > kMaxQubits) {
        throw std::invalid_argument("decompose: more than 12 qubits");
    }

    // Row-major working copy; w[r*n + c] ends up holding N·c_P with, per qubit,
    // (row bit, col bit) = 00→I, 01→X, 10→Y, 11→Z.
    std::vector<Complex> w(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            w[r * n + c] = a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    const Complex i_unit{0.0, 1.0};
    for (int b = 0; b < q; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t r = 0; r < n; ++r) {
            if (r & bit) {
                continue;
            }
            Complex *row0 = &w[r * n];
            Complex *row1 = &w[(r | bit) * n];
            for (std::size_t c = 0; c < n; ++c) {
                if (c & bit) {
                    continue;
                }
                const Complex a00 = row0[c];
                const Complex a01 = row0[c | bit];
                const Complex a10 = row1[c];
                const Complex a11 = row1[c | bit];
                row0[c] = a00 + a11;
                row0[c | bit] = a01 + a10;
                row1[c] = i_unit * (a01 - a10);
                row1[c | bit] = a00 - a11;
            }
        }
    }

    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<PauliTerm> terms;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const Complex coeff = w[r * n + c] * inv_n;
            if (std::abs(coeff) <= tol) {
                continue;
            }
            // Per qubit: X and Y have row bit != col bit; Y and Z have row bit set.
            const std::uint64_t x_mask = r ^ c;
            const std::uint64_t z_mask = r;
            terms.push_back({coeff, PauliString::from_masks(q, x_mask, z_mask)});
        }
    }
    return PauliDecomposition(q, std::move(terms));
}

CMatrix reconstruct(const PauliDecomposition &d) {
    const auto n = static_cast<Eigen::Index>(d.dim());
    CMatrix m = CMatrix::Zero(n, n);
    for (const auto &t : d.terms()) {
        const std::uint64_t x = t.string.x_mask();
        for (Eigen::Index k = 0; k < n; ++k) {
            const auto ku = static_cast<std::uint64_t>(k);
            m(static_cast<Eigen::Index>(ku ^ x), k) += t.coeff * t.string.phase(ku);
        }
    }
    return m;
}

namespace {

void accumulate_term(const PauliString &s, Complex scale, const CVector &v, CVector &out) {
    const std::uint64_t x = s.x_mask();
    const auto n = static_cast<std::uint64_t>(v.size());
    for (std::uint64_t k = 0; k < n; ++k) {
        out(static_cast<Eigen::Index>(k ^ x)) += scale * s.phase(k) * v(static_cast<Eigen::Index>(k));
    }
}

} // namespace

CVector apply_term(const PauliString &s, const CVector &v) {
    if (v.size() != (Eigen::Index{1} << s.qubits())) {
        throw std::invalid_argument("apply_term: vector length does not match Pauli string");
    }
    CVector out = CVector::Zero(v.size());
    accumulate_term(s, Complex{1.0, 0.0}, v, out);
    return out;
}

CVector apply_decomposition(const PauliDecomposition &d, const CVector &v) {
    if (static_cast<std::size_t>(v.size()) != d.dim()) {
        throw std::invalid_argument("apply_decomposition: dimension mismatch");
    }
    CVector out = CVector::Zero(v.size());
    for (const auto &t : d.terms()) {
        accumulate_term(t.string, t.coeff, v, out);
    }
    return out;
}

std::string decomposition_to_json(const PauliDecomposition &d) {
    nlohmann::json j;
    j["qubits"] = d.qubits();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : d.terms()) {
        terms.push_back({t.coeff.real(), t.coeff.imag(), t.string.label()});
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

} // namespace vqls
