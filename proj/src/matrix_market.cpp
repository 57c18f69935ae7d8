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

#include "vqls/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "vqls/random.hpp"

namespace vqls {

namespace {

enum class Format { Coordinate, Array };
enum class Field { Real, Integer, Complex, Pattern };
enum class Symmetry { General, Symmetric, SkewSymmetric, Hermitian };

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool blank_or_comment(const std::string &line) {
    for (const char c : line) {
        if (c == '%') {
            return true;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

struct LineReader {
    std::istream &in;
    std::size_t number = 0;

    bool next_data(std::string &line) {
        while (std::getline(in, line)) {
            ++number;
            if (!blank_or_comment(line)) {
                return true;
            }
        }
        return false;
    }
};

Complex read_value(std::istringstream &ss, Field field, std::size_t line) {
    double re = 0.0;
    double im = 0.0;
    switch (field) {
    case Field::Pattern:
        return {1.0, 0.0};
    case Field::Real:
    case Field::Integer:
        if (!(ss >> re)) {
            throw ParseError("expected a numeric value", line);
        }
        return {re, 0.0};
    case Field::Complex:
        if (!(ss >> re >> im)) {
            throw ParseError("expected real and imaginary parts", line);
        }
        return {re, im};
    }
    return {};
}

void place(CMatrix &m, Eigen::Index i, Eigen::Index j, Complex v, Symmetry sym) {
    m(i, j) += v;
    if (i == j) {
        return;
    }
    switch (sym) {
    case Symmetry::General:
        break;
    case Symmetry::Symmetric:
        m(j, i) += v;
        break;
    case Symmetry::SkewSymmetric:
        m(j, i) -= v;
        break;
    case Symmetry::Hermitian:
        m(j, i) += std::conj(v);
        break;
    }
}

} // namespace

MarketMatrix parse_matrix_market(std::istream &in) {
    LineReader reader{in};
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("empty file", 1);
    }
    reader.number = 1;
    std::istringstream head(line);
    std::string banner, object, format_s, field_s, sym_s;
    head >> banner >> object >> format_s >> field_s >> sym_s;
    if (banner != "%%MatrixMarket" || lower(object) != "matrix") {
        throw ParseError("missing '%%MatrixMarket matrix' banner", 1);
    }
    Format format{};
    const std::string fmt = lower(format_s);
    if (fmt == "coordinate") {
        format = Format::Coordinate;
    } else if (fmt == "array") {
        format = Format::Array;
    } else {
        throw ParseError("unknown format '" + format_s + "'", 1);
    }
    Field field{};
    const std::string fld = lower(field_s);
    if (fld == "real" || fld == "double") {
        field = Field::Real;
    } else if (fld == "integer") {
        field = Field::Integer;
    } else if (fld == "complex") {
        field = Field::Complex;
    } else if (fld == "pattern" && format == Format::Coordinate) {
        field = Field::Pattern;
    } else {
        throw ParseError("unsupported field '" + field_s + "'", 1);
    }
    Symmetry sym{};
    const std::string sy = lower(sym_s);
    if (sy == "general") {
        sym = Symmetry::General;
    } else if (sy == "symmetric") {
        sym = Symmetry::Symmetric;
    } else if (sy == "skew-symmetric") {
        sym = Symmetry::SkewSymmetric;
    } else if (sy == "hermitian" && field == Field::Complex) {
        sym = Symmetry::Hermitian;
    } else {
        throw ParseError("unsupported symmetry '" + sym_s + "'", 1);
    }

    if (!reader.next_data(line)) {
        throw ParseError("missing size line", reader.number + 1);
    }
    std::istringstream size_line(line);
    long long rows = 0;
    long long cols = 0;
    long long entries = 0;
    if (!(size_line >> rows >> cols)) {
        throw ParseError("malformed size line", reader.number);
    }
    if (format == Format::Coordinate && !(size_line >> entries)) {
        throw ParseError("coordinate size line needs an entry count", reader.number);
    }
    if (rows <= 0 || rows != cols) {
        throw ParseError("matrix must be square and nonempty", reader.number);
    }
    if (rows > (1LL << kMaxQubits)) {
        throw std::invalid_argument("dimension " + std::to_string(rows) +
                                    " pads beyond 2^12 (desk-scale cap)");
    }

    MarketMatrix out;
    out.complex_field = field == Field::Complex;
    out.values = CMatrix::Zero(rows, cols);

    if (format == Format::Coordinate) {
        for (long long k = 0; k < entries; ++k) {
            if (!reader.next_data(line)) {
                throw ParseError("expected " + std::to_string(entries) + " entries, found " +
                                     std::to_string(k),
                                 reader.number + 1);
            }
            std::istringstream ss(line);
            long long i = 0;
            long long j = 0;
            if (!(ss >> i >> j)) {
                throw ParseError("malformed coordinate entry", reader.number);
            }
            if (i < 1 || j < 1 || i > rows || j > cols) {
                throw ParseError("index out of range", reader.number);
            }
            const Complex v = read_value(ss, field, reader.number);
            place(out.values, i - 1, j - 1, v, sym);
        }
    } else {
        // Column-major; symmetric variants list only the lower triangle.
        for (long long j = 0; j < cols; ++j) {
            const long long first = sym == Symmetry::General         ? 0
                                    : sym == Symmetry::SkewSymmetric ? j + 1
                                                                     : j;
            for (long long i = first; i < rows; ++i) {
                if (!reader.next_data(line)) {
                    throw ParseError("array data ended early", reader.number + 1);
                }
                std::istringstream ss(line);
                const Complex v = read_value(ss, field, reader.number);
                place(out.values, i, j, v, sym);
            }
        }
    }
    if (reader.next_data(line)) {
        throw ParseError("unexpected trailing data", reader.number);
    }
    return out;
}

CMatrix pad_to_power_of_two(const CMatrix &m) {
    const auto n = static_cast<std::size_t>(m.rows());
    std::size_t padded = 2;
    while (padded < n) {
        padded <<= 1;
    }
    const auto p = static_cast<Eigen::Index>(padded);
    CMatrix out = CMatrix::Zero(p, p);
    out.topLeftCorner(m.rows(), m.cols()) = m;
    for (Eigen::Index i = m.rows(); i < p; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

namespace {

CVector read_rhs_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open rhs file " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("rhs file: ") + e.what(), 0);
    }
    if (!j.is_array()) {
        throw ParseError("rhs file must hold an array of [re, im] pairs", 0);
    }
    CVector b(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) {
        const auto &e = j[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw ParseError("rhs entry " + std::to_string(k) + " is not [re, im]", 0);
        }
        b(static_cast<Eigen::Index>(k)) = Complex{e[0].get<double>(), e[1].get<double>()};
    }
    return b;
}

} // namespace

LinearSystem load_matrix_market(const std::filesystem::path &path, const RhsPolicy &policy,
                                std::string id) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    MarketMatrix raw = parse_matrix_market(in);
    const Eigen::Index n = raw.values.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        if ((raw.values.row(i).array() == Complex{0.0, 0.0}).all()) {
            throw std::invalid_argument("row " + std::to_string(i + 1) +
                                        " is zero (singular by construction)");
        }
    }
    CMatrix a = pad_to_power_of_two(raw.values);
    const Eigen::Index padded = a.rows();

    CVector b = CVector::Zero(padded);
    if (std::holds_alternative<RhsOnes>(policy)) {
        b.head(n).setOnes();
    } else if (const auto *r = std::get_if<RhsRandom>(&policy)) {
        Rng rng(r->seed);
        for (Eigen::Index i = 0; i < n; ++i) {
            b(i) = rng.uniform(-1.0, 1.0);
        }
    } else {
        const CVector given = read_rhs_file(std::get<RhsFile>(policy).path);
        if (given.size() != n && given.size() != padded) {
            throw std::invalid_argument("rhs file length " + std::to_string(given.size()) +
                                        " matches neither " + std::to_string(n) + " nor " +
                                        std::to_string(padded));
        }
        b.head(n) = given.head(n);
    }
    const double norm = b.norm();
    if (norm == 0.0) {
        throw std::invalid_argument("rhs is zero");
    }
    b /= norm;

    SystemMeta meta;
    meta.source = "suitesparse:" + path.stem().string();
    meta.original_dim = static_cast<std::size_t>(n);
    if (const auto *r = std::get_if<RhsRandom>(&policy)) {
        meta.seed = r->seed;
    }
    if (id.empty()) {
        id = path.stem().string();
    }
    return LinearSystem::make(std::move(a), std::move(b), std::move(id), std::move(meta));
}

void write_matrix_market(std::ostream &out, const CMatrix &m) {
    const bool complex_field = (m.array().imag() != 0.0).any();
    std::size_t nnz = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            nnz += m(i, j) != Complex{0.0, 0.0} ? 1 : 0;
        }
    }
    out << "%%MatrixMarket matrix coordinate " << (complex_field ? "complex" : "real")
        << " general\n";
    out << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
    char buf[96];
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const Complex v = m(i, j);
            if (v == Complex{0.0, 0.0}) {
                continue;
            }
            if (complex_field) {
                std::snprintf(buf, sizeof buf, "%lld %lld %.17g %.17g\n",
                              static_cast<long long>(i + 1), static_cast<long long>(j + 1),
                              v.real(), v.imag());
            } else {
                std::snprintf(buf, sizeof buf, "%lld %lld %.17g\n", static_cast<long long>(i + 1),
                              static_cast<long long>(j + 1), v.real());
            }
            out << buf;
        }
    }
}

void write_matrix_market(const std::filesystem::path &path, const CMatrix &m) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_matrix_market(out, m);
}

} // namespace vqls
