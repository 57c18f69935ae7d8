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

#include "json.hpp"
#include "oracles.hpp"
#include "vqls/simulator.hpp"

namespace vqls {
namespace {

double fidelity(const CVector &a, const CVector &b) { return oracle::fidelity(a, b); }

TEST(PrepareZero, BasisState) {
    const StateVector v1 = prepare_zero(1);
    EXPECT_EQ(v1.amplitudes()(0), Complex(1));
    EXPECT_EQ(v1.amplitudes()(1), Complex(0));
    const StateVector v2 = prepare_zero(2);
    EXPECT_TRUE(v2.amplitudes() == CVector::Unit(4, 0));
    EXPECT_DOUBLE_EQ(v2.amplitudes().norm(), 1.0);
    EXPECT_THROW(prepare_zero(0), std::invalid_argument);
}

TEST(StateVector, Validation) {
    EXPECT_THROW(StateVector(2, CVector::Unit(2, 0)), std::invalid_argument);
    EXPECT_THROW(StateVector(1, CVector::Ones(2)), std::invalid_argument);
    EXPECT_NO_THROW(StateVector(1, CVector::Unit(2, 1)));
    const StateVector v = prepare_zero(3);
    EXPECT_EQ(v.qubit_mask(0), 4u);
    EXPECT_EQ(v.qubit_mask(2), 1u);
    const auto j = nlohmann::json::parse(to_json(v));
    ASSERT_EQ(j.size(), 8u);
    EXPECT_EQ(j[0][0], 1.0);
}

TEST(Gates, RyPiFlips) {
    StateVector v = prepare_zero(1);
    apply_ry(v, 0, kPi);
    EXPECT_LT(std::abs(v.amplitudes()(0)), 1e-15);
    EXPECT_LT(std::abs(v.amplitudes()(1) - Complex(1)), 1e-15);
}

TEST(Gates, RzPhaseOnly) {
    StateVector v = prepare_zero(1);
    apply_rz(v, 0, 0.7);
    EXPECT_LT(std::abs(v.amplitudes()(0) - std::exp(Complex(0, -0.35))), 1e-15);
    EXPECT_DOUBLE_EQ(std::norm(v.amplitudes()(0)), 1.0);
}

TEST(Gates, CzSignOnlyOnBothOnes) {
    StateVector v11(2, CVector::Unit(4, 3));
    apply_cz(v11, 0, 1);
    EXPECT_EQ(v11.amplitudes()(3), Complex(-1));
    StateVector v00 = prepare_zero(2);
    apply_cz(v00, 1, 0);
    EXPECT_EQ(v00.amplitudes()(0), Complex(1));
}

TEST(Gates, MatchDenseOnEveryQubit) {
    oracle::Gen g(3);
    const int q = 3;
    for (int j = 0; j < q; ++j) {
        const CVector x = g.unit(8);
        const double t = g.uni(-4, 4);
        StateVector a(q, x);
        apply_ry(a, j, t);
        EXPECT_LT((a.amplitudes() - oracle::embed(oracle::ry(t), j, q) * x).norm(), 1e-14);
        StateVector b(q, x);
        apply_rz(b, j, t);
        EXPECT_LT((b.amplitudes() - oracle::embed(oracle::rz(t), j, q) * x).norm(), 1e-14);
        const int k = (j + 1) % q;
        StateVector c(q, x);
        apply_cz(c, j, k);
        EXPECT_LT((c.amplitudes() - oracle::cz(j, k, q) * x).norm(), 1e-15);
    }
}

TEST(Gates, PreserveNorm) {
    oracle::Gen g(4);
    StateVector v(4, g.unit(16));
    for (int step = 0; step < 200; ++step) {
        const int j = step % 4;
        switch (step % 3) {
        case 0:
            apply_ry(v, j, g.uni(-10, 10));
            break;
        case 1:
            apply_rz(v, j, g.uni(-10, 10));
            break;
        default:
            apply_cz(v, j, (j + 1) % 4);
        }
        EXPECT_NEAR(v.amplitudes().norm(), 1.0, 1e-12);
    }
}

TEST(Gates, IndexErrors) {
    StateVector v = prepare_zero(2);
    EXPECT_THROW(apply_ry(v, 2, 0.1), std::out_of_range);
    EXPECT_THROW(apply_rz(v, -1, 0.1), std::out_of_range);
    EXPECT_THROW(apply_cz(v, 0, 2), std::out_of_range);
    EXPECT_THROW(apply_cz(v, 1, 1), std::invalid_argument);
}

TEST(ParamSet, ShapeAndFiniteness) {
    EXPECT_THROW(ParamSet(2, {1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(ParamSet(1, {1, 2, std::nan("")}), std::invalid_argument);
    EXPECT_THROW(ParamSet(1, {1, 2, INFINITY}), std::invalid_argument);
    ParamSet p(2, {0, 1, 2, 3, 4, 5});
    EXPECT_EQ(p(1, 0), 3.0);
    p(0, 2) = 9.0;
    EXPECT_EQ(p.flat()[2], 9.0);
    EXPECT_EQ(ParamSet(3).size(), 9u);
}

TEST(Ansatz, ZeroAnglesGiveZeroState) {
    for (int q = 1; q <= 5; ++q) {
        const StateVector v = ansatz_state(ParamSet(q));
        EXPECT_LT((v.amplitudes() - CVector::Unit(Eigen::Index{1} << q, 0)).norm(), 1e-15);
    }
}

TEST(Ansatz, SingleRy) {
    const StateVector v = ansatz_state(ParamSet(1, {kPi / 2, 0, 0}));
    EXPECT_LT(std::abs(v.amplitudes()(0) - Complex(std::sqrt(0.5))), 1e-15);
    EXPECT_LT(std::abs(v.amplitudes()(1) - Complex(std::sqrt(0.5))), 1e-15);
}

TEST(Ansatz, MatchesDenseUnitary) {
    oracle::Gen g(12);
    for (int q = 1; q <= 4; ++q) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = g.angles(q);
            const StateVector v = ansatz_state(ParamSet(q, a));
            EXPECT_LT((v.amplitudes() - oracle::ansatz_vector(a, q)).norm(), 1e-12) << q;
        }
    }
}

TEST(Ansatz, Continuity) {
    oracle::Gen g(8);
    const auto a = g.angles(4);
    const CVector base = ansatz_state(ParamSet(4, a)).amplitudes();
    for (std::size_t k = 0; k < a.size(); ++k) {
        auto b = a;
        b[k] += 1e-7;
        EXPECT_LE((ansatz_state(ParamSet(4, b)).amplitudes() - base).norm(), 1e-6);
    }
}

TEST(Ansatz, TwoPiPeriodicUpToPhase) {
    oracle::Gen g(10);
    const auto a = g.angles(3);
    const CVector base = ansatz_state(ParamSet(3, a)).amplitudes();
    for (std::size_t k = 0; k < a.size(); ++k) {
        auto b = a;
        b[k] += kTwoPi;
        EXPECT_NEAR(fidelity(base, ansatz_state(ParamSet(3, b)).amplitudes()), 1.0, 1e-10);
    }
}

TEST(BPrep, BasisZeroIsIdentity) {
    const BPrepOperator u = build_bprep(CVector::Unit(4, 0));
    EXPECT_TRUE(u.is_identity());
    EXPECT_EQ(u.reflector().size(), 0);
}

TEST(BPrep, PlusState) {
    CVector b(2);
    b << 1, 1;
    b /= std::sqrt(2.0);
    const BPrepOperator u = build_bprep(b);
    EXPECT_FALSE(u.is_identity());
    EXPECT_LT((apply_bprep(u, CVector::Unit(2, 0)) - b).norm(), 1e-15);
    CMatrix dense(2, 2);
    dense.col(0) = apply_bprep(u, CVector::Unit(2, 0));
    dense.col(1) = apply_bprep(u, CVector::Unit(2, 1));
    EXPECT_LT((dense.adjoint() * dense - CMatrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(BPrep, GlobalPhaseOnly) {
    const CVector b = Complex(0, 1) * CVector::Unit(2, 0);
    const BPrepOperator u = build_bprep(b);
    EXPECT_TRUE(u.is_identity());
    EXPECT_LT(std::abs(u.phase() - Complex(0, 1)), 1e-15);
    const CVector out = apply_bprep(u, CVector::Unit(2, 0));
    EXPECT_LT((out - b).norm(), 1e-15);
}

TEST(BPrep, AdjointSendsBToZero) {
    oracle::Gen g(5);
    for (int q = 1; q <= 5; ++q) {
        const CVector b = g.unit(Eigen::Index{1} << q);
        const BPrepOperator u = build_bprep(b);
        const CVector out = apply_bprep_adjoint(u, b);
        EXPECT_NEAR(std::abs(out(0)), 1.0, 1e-10);
        EXPECT_LT(out.tail(out.size() - 1).norm(), 1e-10);
    }
}

TEST(BPrep, IdentityAdjointUnchangedUpToPhase) {
    oracle::Gen g(2);
    const CVector v = g.unit(8);
    const BPrepOperator u = build_bprep(CVector::Unit(8, 0));
    EXPECT_NEAR(fidelity(apply_bprep_adjoint(u, v), v), 1.0, 1e-15);
}

TEST(BPrep, MatchesDenseHouseholder) {
    oracle::Gen g(44);
    for (int q = 1; q <= 4; ++q) {
        const Eigen::Index n = Eigen::Index{1} << q;
        const CVector b = g.unit(n);
        const CMatrix dense = oracle::householder_unitary(b);
        EXPECT_LT((dense.col(0) - b).norm(), 1e-12);
        const BPrepOperator u = build_bprep(b);
        const CVector v = g.unit(n);
        EXPECT_LT((apply_bprep_adjoint(u, v) - dense.adjoint() * v).norm(), 1e-12);
        EXPECT_LT((apply_bprep(u, v) - dense * v).norm(), 1e-12);
    }
}

TEST(BPrep, RealAndNegativeLeadingEntry) {
    CVector b(4);
    b << -0.5, 0.5, -0.5, 0.5;
    const BPrepOperator u = build_bprep(b);
    EXPECT_LT((apply_bprep(u, CVector::Unit(4, 0)) - b).norm(), 1e-14);
    CVector c(4);
    c << 0, 1, 0, 0;
    EXPECT_LT((apply_bprep(build_bprep(c), CVector::Unit(4, 0)) - c).norm(), 1e-14);
}

TEST(BPrep, Errors) {
    EXPECT_THROW(build_bprep(CVector::Ones(4)), std::invalid_argument);
    EXPECT_THROW(build_bprep(CVector::Unit(3, 0)), std::invalid_argument);
    const BPrepOperator u = build_bprep(CVector::Unit(4, 1));
    EXPECT_THROW(apply_bprep_adjoint(u, CVector::Unit(2, 0)), std::invalid_argument);
    EXPECT_THROW(apply_bprep(u, CVector::Unit(8, 0)), std::invalid_argument);
}

} // namespace
} // namespace vqls
