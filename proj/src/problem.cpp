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

#include "vqls/problem.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "vqls/random.hpp"

namespace vqls {

LinearSystem LinearSystem::make(CMatrix matrix, CVector rhs, std::string id, SystemMeta meta) {
    const auto n = static_cast<std::size_t>(matrix.rows());
    if (matrix.rows() != matrix.cols()) {
        throw std::invalid_argument("matrix must be square");
    }
    if (!is_power_of_two(n) || n < 2) {
        throw std::invalid_argument("dimension " + std::to_string(n) +
                                    " is not a power of two >= 2");
    }
    if (rhs.size() != matrix.rows()) {
        throw std::invalid_argument("rhs length does not match matrix dimension");
    }
    const int q = log2_exact(n);
    if (q > kMaxQubits) {
        throw std::invalid_argument("dimension exceeds 2^12");
    }
    if (!matrix.allFinite() || !rhs.allFinite()) {
        throw std::invalid_argument("system contains non-finite values");
    }
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        if ((matrix.row(i).array() == Complex{0.0, 0.0}).all()) {
            throw std::invalid_argument("row " + std::to_string(i) + " of A is zero");
        }
    }
    if (meta.original_dim == 0) {
        meta.original_dim = n;
    }
    return LinearSystem(std::move(matrix), std::move(rhs), std::move(id), std::move(meta), q);
}

std::size_t LinearSystem::nonzeros() const {
    return static_cast<std::size_t>((matrix_.array() != Complex{0.0, 0.0}).count());
}

std::string synthetic_id(int qubits, std::uint64_t seed) {
    return "syn_q" + std::to_string(qubits) + "_s" + std::to_string(seed);
}

LinearSystem gen_random_system(int qubits, double density, std::uint64_t seed, std::string id) {
    if (qubits < 2 || qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must lie in [2, 12]");
    }
    if (!(density > 0.0) || density > 1.0) {
        throw std::invalid_argument("density must lie in (0, 1]");
    }
    const std::size_t n = std::size_t{1} << qubits;
    Rng rng(seed);

    CMatrix a = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = rng.uniform(1.0, 2.0);
    }

    // Off-diagonal slot k ↦ (row k / (n-1), column skipping the diagonal).
    const std::uint64_t slots = n * n - n;
    const auto wanted = static_cast<std::uint64_t>(std::ceil(density * static_cast<double>(n * n)));
    const std::uint64_t count = std::min(wanted, slots);

    // Floyd's sampling keeps draw order deterministic without an O(N²) index table.
    std::vector<std::uint64_t> chosen;
    chosen.reserve(count);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(count * 2);
    for (std::uint64_t j = slots - count; j < slots; ++j) {
        std::uint64_t t = rng.index(j + 1);
        if (!seen.insert(t).second) {
            t = j;
            seen.insert(t);
        }
        chosen.push_back(t);
    }
    for (const std::uint64_t slot : chosen) {
        const std::uint64_t row = slot / (n - 1);
        std::uint64_t col = slot % (n - 1);
        if (col >= row) {
            ++col;
        }
        double v = 0.0;
        while (v == 0.0) {
            v = rng.uniform(-1.0, 1.0);
        }
        a(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v;
    }

    CVector b(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        b(static_cast<Eigen::Index>(i)) = rng.uniform(-1.0, 1.0);
    }
    const double norm = b.norm();
    if (norm == 0.0) {
        b.setZero();
        b(0) = 1.0;
    } else {
        b /= norm;
    }

    SystemMeta meta;
    meta.source = "synthetic";
    meta.original_dim = n;
    meta.seed = seed;
    meta.density = density;
    if (id.empty()) {
        id = synthetic_id(qubits, seed);
    }
    return LinearSystem::make(std::move(a), std::move(b), std::move(id), std::move(meta));
}

LinearSystem normalize_system(const LinearSystem &sys) {
    const double bnorm = sys.rhs().norm();
    if (bnorm == 0.0) {
        throw std::invalid_argument("rhs is zero");
    }
    const double fro = sys.matrix().norm();
    const double mscale = static_cast<double>(sys.dim()) / fro;
    SystemMeta meta = sys.meta();
    meta.rhs_scale *= 1.0 / bnorm;
    meta.matrix_scale *= mscale;
    return LinearSystem::make(sys.matrix() * mscale, sys.rhs() / bnorm, sys.id(), meta);
}

DatasetSplit split_dataset(const std::vector<std::string> &ids, std::uint64_t seed) {
    if (ids.size() < 10) {
        throw std::invalid_argument("split_dataset needs at least 10 ids");
    }
    if (std::set<std::string>(ids.begin(), ids.end()).size() != ids.size()) {
        throw std::invalid_argument("split_dataset: duplicate ids");
    }
    std::vector<std::string> order = ids;
    Rng rng(seed);
    for (std::size_t i = order.size() - 1; i > 0; --i) {
        std::swap(order[i], order[rng.index(i + 1)]);
    }
    const std::size_t n = order.size();
    const std::size_t train = n * 8 / 10;
    const std::size_t rest = n - train;
    const std::size_t val = (rest + 1) / 2;

    DatasetSplit s;
    s.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(train));
    s.val.assign(order.begin() + static_cast<std::ptrdiff_t>(train),
                 order.begin() + static_cast<std::ptrdiff_t>(train + val));
    s.test.assign(order.begin() + static_cast<std::ptrdiff_t>(train + val), order.end());
    return s;
}

} // namespace vqls
