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


#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "test_util.hpp"
#include "vqls/matrix_market.hpp"

namespace vqls {
namespace {

using testing_util::TempDir;
using testing_util::write_file;

MarketMatrix parse(const std::string &text) {
    std::istringstream in(text);
    return parse_matrix_market(in);
}

std::size_t parse_error_line(const std::string &text) {
    try {
        parse(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    return 0;
}

TEST(MatrixMarket, IdentityPaddedWithOnesRhs) {
    TempDir dir;
    write_file(dir / "eye3.mtx",
               "%%MatrixMarket matrix coordinate real general\n% comment\n3 3 3\n1 1 1\n2 2 1\n3 3 1\n");
    const LinearSystem s = load_matrix_market(dir / "eye3.mtx", RhsOnes{});
    EXPECT_EQ(s.qubits(), 2);
    EXPECT_TRUE(s.matrix() == CMatrix::Identity(4, 4));
    CVector want(4);
    want << 1, 1, 1, 0;
    want /= std::sqrt(3.0);
    EXPECT_LT((s.rhs() - want).norm(), 1e-15);
    EXPECT_EQ(s.meta().original_dim, 3u);
    EXPECT_EQ(s.meta().source, "suitesparse:eye3");
    EXPECT_EQ(s.id(), "eye3");
}

TEST(MatrixMarket, SymmetricExpansion) {
    const MarketMatrix m = parse(
        "%%MatrixMarket matrix coordinate real symmetric\n3 3 4\n1 1 2\n2 1 5\n2 2 3\n3 3 1\n");
    EXPECT_EQ(m.values(1, 0), Complex(5.0));
    EXPECT_EQ(m.values(0, 1), Complex(5.0));
    EXPECT_EQ(m.values(0, 0), Complex(2.0));
    EXPECT_FALSE(m.complex_field);
}

TEST(MatrixMarket, SkewAndHermitianExpansion) {
    const MarketMatrix skew =
        parse("%%MatrixMarket matrix coordinate real skew-symmetric\n2 2 1\n2 1 4\n");
    EXPECT_EQ(skew.values(1, 0), Complex(4.0));
    EXPECT_EQ(skew.values(0, 1), Complex(-4.0));
    const MarketMatrix herm =
        parse("%%MatrixMarket matrix coordinate complex hermitian\n2 2 3\n1 1 1 0\n2 1 1 2\n2 2 3 0\n");
    EXPECT_TRUE(herm.complex_field);
    EXPECT_EQ(herm.values(1, 0), Complex(1.0, 2.0));
    EXPECT_EQ(herm.values(0, 1), Complex(1.0, -2.0));
}

TEST(MatrixMarket, FivePadsToEight) {
    TempDir dir;
    std::ostringstream text;
    text << "%%MatrixMarket matrix array real general\n5 5\n";
    for (int j = 0; j < 5; ++j) {
        for (int i = 0; i < 5; ++i) {
            text << (i == j ? 2.0 : 0.25 * (i + 1)) << '\n';
        }
    }
    write_file(dir / "five.mtx", text.str());
    const LinearSystem s = load_matrix_market(dir / "five.mtx", RhsOnes{});
    EXPECT_EQ(s.qubits(), 3);
    EXPECT_EQ(s.meta().original_dim, 5u);
    for (Eigen::Index r = 5; r < 8; ++r) {
        EXPECT_TRUE(s.matrix().row(r).transpose() == CVector::Unit(8, r));
        EXPECT_EQ(s.rhs()(r), Complex(0.0));
    }
    // Array storage is column-major.
    EXPECT_EQ(s.matrix()(1, 0), Complex(0.5));
    EXPECT_EQ(s.matrix()(0, 1), Complex(0.25));
}

TEST(MatrixMarket, IntegerAndPatternFields) {
    const MarketMatrix ints = parse("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 3\n2 2 -4\n");
    EXPECT_EQ(ints.values(1, 1), Complex(-4.0));
    const MarketMatrix pat = parse("%%MatrixMarket matrix coordinate pattern general\n2 2 2\n1 2\n2 1\n");
    EXPECT_EQ(pat.values(0, 1), Complex(1.0));
    EXPECT_EQ(pat.values(0, 0), Complex(0.0));
}

TEST(MatrixMarket, DuplicatesSummed) {
    const MarketMatrix m = parse("%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 1\n1 1 2.5\n2 2 1\n");
    EXPECT_EQ(m.values(0, 0), Complex(3.5));
}

TEST(MatrixMarket, ParseErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("hello\n"), 1u);
    EXPECT_EQ(parse_error_line("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n2 x 1\n"), 4u);
    EXPECT_EQ(parse_error_line("%%MatrixMarket matrix coordinate real general\n% c\n2 2 2\n1 1 1\n3 3 1\n"), 5u);
    EXPECT_EQ(parse_error_line("%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 1\n2 2 1\n"), 5u);
    EXPECT_EQ(parse_error_line("%%MatrixMarket matrix coordinate real general\n2 3 1\n1 1 1\n"), 2u);
    EXPECT_GT(parse_error_line("%%MatrixMarket matrix coordinate quaternion general\n2 2 1\n1 1 1\n"), 0u);
    EXPECT_GT(parse_error_line(""), 0u);
}

TEST(MatrixMarket, RejectsZeroRow) {
    TempDir dir;
    write_file(dir / "z.mtx", "%%MatrixMarket matrix coordinate real general\n3 3 2\n1 1 1\n3 3 1\n");
    EXPECT_THROW(load_matrix_market(dir / "z.mtx", RhsOnes{}), std::invalid_argument);
}

TEST(MatrixMarket, RejectsBeyondCap) {
    EXPECT_THROW(parse("%%MatrixMarket matrix coordinate real general\n4097 4097 1\n1 1 1\n"),
                 std::invalid_argument);
    EXPECT_NO_THROW(parse("%%MatrixMarket matrix coordinate real general\n4096 4096 1\n1 1 1\n"));
}

TEST(MatrixMarket, RhsPolicies) {
    TempDir dir;
    write_file(dir / "m.mtx", "%%MatrixMarket matrix coordinate real general\n3 3 3\n1 1 1\n2 2 2\n3 3 3\n");
    const LinearSystem r1 = load_matrix_market(dir / "m.mtx", RhsRandom{5});
    const LinearSystem r2 = load_matrix_market(dir / "m.mtx", RhsRandom{5});
    EXPECT_TRUE(r1.rhs() == r2.rhs());
    EXPECT_NEAR(r1.rhs().norm(), 1.0, 1e-14);
    EXPECT_EQ(r1.rhs()(3), Complex(0.0));
    write_file(dir / "b.json", "[[3,0],[0,4],[0,0]]");
    const LinearSystem f = load_matrix_market(dir / "m.mtx", RhsFile{dir / "b.json"});
    EXPECT_LT(std::abs(f.rhs()(0) - Complex(0.6)), 1e-15);
    EXPECT_LT(std::abs(f.rhs()(1) - Complex(0.0, 0.8)), 1e-15);
    write_file(dir / "short.json", "[[1,0]]");
    EXPECT_THROW(load_matrix_market(dir / "m.mtx", RhsFile{dir / "short.json"}), std::invalid_argument);
    write_file(dir / "bad.json", "[[1,0],{}]");
    EXPECT_THROW(load_matrix_market(dir / "m.mtx", RhsFile{dir / "bad.json"}), ParseError);
}

TEST(MatrixMarket, WriteThenLoadIsIdempotent) {
    TempDir dir;
    oracle::Gen g(2);
    CMatrix a = CMatrix::Zero(6, 6);
    for (Eigen::Index i = 0; i < 6; ++i) {
        a(i, i) = 1.5 + 0.125 * static_cast<double>(i);
        a(i, (i + 2) % 6) = g.uni(-1, 1);
    }
    write_matrix_market(dir / "a.mtx", a);
    const LinearSystem once = load_matrix_market(dir / "a.mtx", RhsOnes{});
    write_matrix_market(dir / "b.mtx", once.matrix());
    const LinearSystem twice = load_matrix_market(dir / "b.mtx", RhsOnes{});
    EXPECT_TRUE(once.matrix() == twice.matrix());
    EXPECT_TRUE(once.matrix().topLeftCorner(6, 6) == a);
}

TEST(MatrixMarket, ComplexRoundTrip) {
    oracle::Gen g(8);
    const CMatrix a = g.dominant(4);
    std::stringstream ss;
    write_matrix_market(ss, a);
    const MarketMatrix back = parse_matrix_market(ss);
    EXPECT_TRUE(back.complex_field);
    EXPECT_TRUE(back.values == a);
}

TEST(MatrixMarket, PadMinimumSizeIsTwo) {
    const CMatrix one = CMatrix::Constant(1, 1, 3.0);
    const CMatrix p = pad_to_power_of_two(one);
    ASSERT_EQ(p.rows(), 2);
    EXPECT_EQ(p(0, 0), Complex(3.0));
    EXPECT_EQ(p(1, 1), Complex(1.0));
    EXPECT_EQ(p(0, 1), Complex(0.0));
}

} // namespace
} // namespace vqls
