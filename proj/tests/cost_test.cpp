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

#include "oracles.hpp"
#include "test_util.hpp"
#include "vqls/cost.hpp"

namespace vqls {
namespace {

using testing_util::system_of;

StateVector state_of(const CVector &v) {
    return StateVector(log2_exact(static_cast<std::size_t>(v.size())), v / v.norm());
}

TEST(CostKind, ParseAndPrint) {
    EXPECT_EQ(parse_cost_kind("global"), CostKind::Global);
    EXPECT_EQ(parse_cost_kind("local"), CostKind::Local);
    EXPECT_EQ(to_string(CostKind::Local), "local");
    EXPECT_THROW(parse_cost_kind("Local"), std::invalid_argument);
}

TEST(GlobalCost, ExactSolutionIsZero) {
    oracle::Gen g(1);
    const CVector b = g.unit(8);
    const LinearSystem s = system_of(CMatrix::Identity(8, 8), b);
    const CostReport r = global_cost(s, state_of(b));
    EXPECT_NEAR(r.normalized, 0.0, 1e-15);
    EXPECT_NEAR(r.psi_norm_sq, 1.0, 1e-14);
    EXPECT_EQ(r.kind, CostKind::Global);
}

TEST(GlobalCost, OrthogonalIsOne) {
    const LinearSystem s = system_of(CMatrix::Identity(4, 4), CVector::Unit(4, 0));
    const CostReport r = global_cost(s, state_of(CVector::Unit(4, 2)));
    EXPECT_DOUBLE_EQ(r.normalized, 1.0);
    EXPECT_DOUBLE_EQ(r.raw, r.psi_norm_sq);
}

TEST(GlobalCost, MatchesDenseOracle) {
    oracle::Gen g(2);
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix a = g.matrix(4);
        const CVector b = g.unit(4);
        const CVector x = g.unit(4);
        const LinearSystem s = system_of(a, b);
        const CostReport r = global_cost(s, state_of(x));
        EXPECT_NEAR(r.normalized, oracle::global_cost(a, b, x), 1e-12);
        EXPECT_NEAR(r.normalized, r.raw / r.psi_norm_sq, 1e-15);
        EXPECT_NEAR(r.psi_norm_sq, (a * x).squaredNorm(), 1e-12);
    }
}

TEST(LocalCost, ExactSolutionIsZero) {
    oracle::Gen g(3);
    const CVector b = g.unit(8);
    const LinearSystem s = system_of(CMatrix::Identity(8, 8), b);
    EXPECT_NEAR(local_cost(s, state_of(b), build_bprep(b)).normalized, 0.0, 1e-14);
}

TEST(LocalCost, EqualsGlobalAtOneQubit) {
    oracle::Gen g(4);
    for (int trial = 0; trial < 50; ++trial) {
        const CMatrix a = g.dominant(2);
        const CVector b = g.unit(2);
        const LinearSystem s = system_of(a, b);
        const StateVector x = state_of(g.unit(2));
        EXPECT_NEAR(global_cost(s, x).normalized, local_cost(s, x, build_bprep(s.rhs())).normalized, 1e-12);
    }
}

TEST(LocalCost, MatchesDenseHamiltonian) {
    oracle::Gen g(5);
    for (int q = 1; q <= 4; ++q) {
        const Eigen::Index n = Eigen::Index{1} << q;
        const CMatrix a = g.matrix(n);
        const CVector b = g.unit(n);
        const CVector x = g.unit(n);
        const LinearSystem s = system_of(a, b);
        EXPECT_NEAR(local_cost(s, state_of(x), build_bprep(s.rhs())).normalized,
                    oracle::local_cost(a, b, x, q), 1e-12);
    }
}

TEST(LocalCost, WrongOperatorRejected) {
    const LinearSystem s = system_of(CMatrix::Identity(4, 4), CVector::Unit(4, 0));
    EXPECT_THROW(local_cost(s, prepare_zero(2), build_bprep(CVector::Unit(8, 0))), std::invalid_argument);
    EXPECT_THROW(global_cost(s, prepare_zero(3)), std::invalid_argument);
}

TEST(Cost, DegenerateIsAnError) {
    CMatrix a(2, 2);
    a << 1, 1, 1, 1;
    const LinearSystem s = system_of(a, CVector::Unit(2, 0));
    CVector x(2);
    x << 1, -1;
    EXPECT_THROW(global_cost(s, state_of(x)), DegenerateCostError);
    EXPECT_THROW(local_cost(s, state_of(x), build_bprep(s.rhs())), DegenerateCostError);
}

TEST(CostModel, PauliAndDenseAgree) {
    oracle::Gen g(6);
    for (int q = 1; q <= 4; ++q) {
        const Eigen::Index n = Eigen::Index{1} << q;
        const LinearSystem s = system_of(g.matrix(n), g.unit(n));
        const CostModel dense(s, MatvecMode::Dense);
        const CostModel pauli(s, MatvecMode::Pauli);
        const ParamSet p(q, g.angles(q));
        for (const CostKind k : {CostKind::Global, CostKind::Local}) {
            EXPECT_NEAR(dense.evaluate(k, p).normalized, pauli.evaluate(k, p).normalized, 1e-12);
        }
        const CVector v = g.unit(n);
        EXPECT_LT((dense.apply_matrix(v) - pauli.apply_matrix(v)).norm(), 1e-12 * (s.matrix() * v).norm());
    }
}

TEST(CostModel, ParamEvaluationGoesThroughAnsatz) {
    oracle::Gen g(7);
    const LinearSystem s = system_of(g.matrix(8), g.unit(8));
    const auto a = g.angles(3);
    const CostModel m(s);
    const CVector x = oracle::ansatz_vector(a, 3);
    EXPECT_NEAR(m.evaluate(CostKind::Global, ParamSet(3, a)).normalized,
                oracle::global_cost(s.matrix(), s.rhs(), x), 1e-12);
    EXPECT_NEAR(m.evaluate(CostKind::Local, ParamSet(3, a)).normalized,
                oracle::local_cost(s.matrix(), s.rhs(), x, 3), 1e-12);
    EXPECT_THROW(m.evaluate(CostKind::Global, ParamSet(2)), std::invalid_argument);
}

TEST(CostProperties, BoundsScaleAndPhaseInvariance) {
    oracle::Gen g(8);
    const std::vector<Complex> scales{2.0, -3.0, Complex(1, 1)};
    for (int trial = 0; trial < 30; ++trial) {
        const int q = 1 + trial % 4;
        const Eigen::Index n = Eigen::Index{1} << q;
        const CMatrix a = g.matrix(n);
        const CVector b = g.unit(n);
        const ParamSet p(q, g.angles(q));
        const LinearSystem s = system_of(a, b);
        const CostModel m(s);
        const double cg = m.evaluate(CostKind::Global, p).normalized;
        const double cl = m.evaluate(CostKind::Local, p).normalized;
        for (const double c : {cg, cl}) {
            EXPECT_GE(c, -1e-9);
            EXPECT_LE(c, 1.0 + 1e-9);
        }
        for (const Complex c : scales) {
            const LinearSystem sc = system_of(c * a, b);
            const CostModel mc(sc);
            EXPECT_NEAR(mc.evaluate(CostKind::Global, p).normalized, cg, 1e-12);
            EXPECT_NEAR(mc.evaluate(CostKind::Local, p).normalized, cl, 1e-12);
        }
        const double theta = g.uni(0, kTwoPi);
        const LinearSystem sp = system_of(a, std::exp(Complex(0, theta)) * b);
        const CostModel mp(sp);
        EXPECT_NEAR(mp.evaluate(CostKind::Global, p).normalized, cg, 1e-12);
        EXPECT_NEAR(mp.evaluate(CostKind::Local, p).normalized, cl, 1e-12);
    }
}

TEST(CostProperties, ZeroIffProportional) {
    oracle::Gen g(9);
    for (int q = 1; q <= 4; ++q) {
        const Eigen::Index n = Eigen::Index{1} << q;
        const CMatrix a = g.dominant(n);
        const CVector b = g.unit(n);
        const LinearSystem s = system_of(a, b);
        const CVector sol = a.partialPivLu().solve(b);
        EXPECT_LT(global_cost(s, state_of(sol)).normalized, 1e-12);
        EXPECT_LT(local_cost(s, state_of(sol), build_bprep(s.rhs())).normalized, 1e-12);
        EXPECT_GT(global_cost(s, state_of(g.unit(n))).normalized, 1e-6);
    }
}

TEST(CostProperties, Sandwich) {
    oracle::Gen g(10);
    for (int trial = 0; trial < 60; ++trial) {
        const int q = 2 + trial % 3;
        const Eigen::Index n = Eigen::Index{1} << q;
        const LinearSystem s = system_of(g.matrix(n), g.unit(n));
        const StateVector x = state_of(g.unit(n));
        const double cg = global_cost(s, x).normalized;
        const double cl = local_cost(s, x, build_bprep(s.rhs())).normalized;
        EXPECT_LE(cl, cg + 1e-9);
        EXPECT_LE(cg, q * cl + 1e-9);
    }
}

TEST(Gradient, ZeroAtExactSolution) {
    const LinearSystem s = system_of(CMatrix::Identity(4, 4), CVector::Unit(4, 0));
    for (const CostKind k : {CostKind::Global, CostKind::Local}) {
        for (const double d : cost_gradient(s, ParamSet(2), k)) {
            EXPECT_NEAR(d, 0.0, 1e-15);
        }
    }
}

TEST(Gradient, MatchesFiniteDifferences) {
    oracle::Gen g(11);
    for (int trial = 0; trial < 10; ++trial) {
        const int q = 2 + trial % 2;
        const Eigen::Index n = Eigen::Index{1} << q;
        const LinearSystem s = system_of(g.dominant(n, false), g.unit(n, false));
        const CostModel m(s);
        const ParamSet p(q, g.angles(q));
        for (const CostKind k : {CostKind::Global, CostKind::Local}) {
            const auto ps = cost_gradient(m, p, k);
            const auto fd = finite_diff_gradient(m, p, k, 1e-5);
            ASSERT_EQ(ps.size(), static_cast<std::size_t>(3 * q));
            for (std::size_t i = 0; i < ps.size(); ++i) {
                if (std::abs(ps[i]) < 1e-8) {
                    EXPECT_NEAR(fd[i], ps[i], 1e-8);
                } else {
                    EXPECT_LT(std::abs(fd[i] - ps[i]) / std::abs(ps[i]), 1e-5);
                }
            }
        }
    }
}

TEST(Gradient, PeriodicInEveryAngle) {
    oracle::Gen g(12);
    const LinearSystem s = system_of(g.matrix(8), g.unit(8));
    const CostModel m(s);
    const ParamSet p(3, g.angles(3));
    const auto base = cost_gradient(m, p, CostKind::Local);
    for (std::size_t k = 0; k < p.size(); ++k) {
        ParamSet shifted = p;
        shifted.flat()[k] += kTwoPi;
        const auto grad = cost_gradient(m, shifted, CostKind::Local);
        for (std::size_t i = 0; i < grad.size(); ++i) {
            EXPECT_NEAR(grad[i], base[i], 1e-9);
        }
    }
}

TEST(Gradient, CostAndGradientConsistent) {
    oracle::Gen g(13);
    const LinearSystem s = system_of(g.matrix(4), g.unit(4));
    const CostModel m(s);
    const ParamSet p(2, g.angles(2));
    const CostWithGradient cg = cost_and_gradient(m, p, CostKind::Global);
    EXPECT_EQ(cg.cost.normalized, m.evaluate(CostKind::Global, p).normalized);
    EXPECT_EQ(cg.gradient, cost_gradient(m, p, CostKind::Global));
}

TEST(FiniteDiff, RejectsNonPositiveStep) {
    const LinearSystem s = system_of(CMatrix::Identity(4, 4), CVector::Unit(4, 0));
    const CostModel m(s);
    EXPECT_THROW(finite_diff_gradient(m, ParamSet(2), CostKind::Global, 0.0), std::invalid_argument);
    EXPECT_THROW(finite_diff_gradient(m, ParamSet(2), CostKind::Global, -1e-3), std::invalid_argument);
}

TEST(FiniteDiff, NearZeroAtStationaryPoint) {
    const LinearSystem s = system_of(CMatrix::Identity(4, 4), CVector::Unit(4, 0));
    const CostModel m(s);
    const double h = 1e-4;
    for (const double d : finite_diff_gradient(m, ParamSet(2), CostKind::Global, h)) {
        EXPECT_LE(std::abs(d), 10 * h * h);
    }
}

} // namespace
} // namespace vqls
