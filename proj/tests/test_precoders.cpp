// SPDX-License-Identifier: Apache-2.0
//
// mubeam: multi-user mmWave hybrid beamforming simulation library
// Copyright (C) 2026 The mubeam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include "mubeam/codebook.hpp"
#include "mubeam/precoders.hpp"
#include "mubeam/quantizers.hpp"
#include "test_helpers.hpp"

using namespace mubeam;
using namespace mubeam::testing;

TEST(Zf, SingleUserIsMatched)
{
    Rng rng(1);
    const CMatrix r = random_matrix(1, 16, rng);
    const auto p = zf_beams(r);
    ASSERT_EQ(p.K(), 1);
    EXPECT_NEAR(alignment(p.beams[0], r.row(0).adjoint()), 1.0, 1e-12);
    EXPECT_NEAR(p.beams[0].norm(), 1.0, 1e-12);
}

TEST(Zf, OrthonormalRows)
{
    CMatrix r = CMatrix::Zero(2, 4);
    r(0, 0) = 3.0;
    r(1, 1) = 0.5;
    const auto p = zf_beams(r);
    EXPECT_NEAR(alignment(p.beams[0], CVector::Unit(4, 0)), 1.0, 1e-14);
    EXPECT_NEAR(alignment(p.beams[1], CVector::Unit(4, 1)), 1.0, 1e-14);
}

TEST(Zf, NullsCrossTerms)
{
    Rng rng(2);
    for (int t = 0; t < 500; ++t) {
        const CMatrix r = random_matrix(2, 64, rng);
        const auto p = zf_beams(r);
        for (int k = 0; k < 2; ++k) {
            EXPECT_NEAR(p.beams[k].norm(), 1.0, 1e-12);
            EXPECT_GT(std::abs(r.row(k).dot(p.beams[k].conjugate())), 0.0);
            for (int m = 0; m < 2; ++m)
                if (m != k)
                    EXPECT_LE(std::abs((r.row(k) * p.beams[m]).value()) / r.row(k).norm(), 1e-9);
        }
    }
}

TEST(Zf, IsProjectedMatchedBeam)
{
    // The ZF beam for user k is the component of row_k^H orthogonal to the other rows.
    Rng rng(3);
    const CMatrix r = random_matrix(3, 10, rng);
    const auto p = zf_beams(r);
    for (int k = 0; k < 3; ++k) {
        CMatrix others(2, 10);
        int j = 0;
        for (int m = 0; m < 3; ++m)
            if (m != k)
                others.row(j++) = r.row(m);
        const CMatrix proj = CMatrix::Identity(10, 10) -
                             others.adjoint() * (others * others.adjoint()).inverse() * others;
        EXPECT_NEAR(alignment(p.beams[k], proj * r.row(k).adjoint()), 1.0, 1e-10);
    }
}

TEST(Zf, RankDeficient)
{
    Rng rng(4);
    CMatrix r = random_matrix(2, 8, rng);
    r.row(1) = cd(0.0, 2.0) * r.row(0);
    EXPECT_THROW(zf_beams(r), RankDeficient);
    EXPECT_THROW(zf_beams(random_matrix(3, 2, rng)), RankDeficient);
}

TEST(Steer, PicksStrongestBeam)
{
    const auto tx = codebook_preset("bs8");
    BeamReport a, b;
    a.rows = {{3, 1.0, 0, 1, 0}, {5, 0.5, 0, 1, 0}};
    b.rows = {{6, 1.0, 0, 1, 0}};
    const std::vector<BeamReport> reps{a, b};
    const auto p = steer_best(reps, tx);
    ASSERT_EQ(p.K(), 2);
    EXPECT_TRUE(p.beams[0] == tx[3]);
    EXPECT_TRUE(p.beams[1] == tx[6]);
    EXPECT_FALSE(p.beams[0] == p.beams[1]);
}

TEST(Ge, ZeroWeightsGiveMatchedBeam)
{
    Rng rng(5);
    const CMatrix r = random_matrix(2, 16, rng);
    const RMatrix eta = RMatrix::Zero(2, 2);
    for (int k = 0; k < 2; ++k)
        EXPECT_NEAR(alignment(ge_beam(k, r, eta), r.row(k).adjoint()), 1.0, 1e-12);
}

TEST(Ge, SingleInterfererClosedForm)
{
    Rng rng(6);
    for (int t = 0; t < 50; ++t) {
        const CMatrix r = random_matrix(2, 8, rng);
        const double c = 0.1 + t;
        RMatrix eta = RMatrix::Zero(2, 2);
        eta(1, 0) = c;
        const CVector r1 = r.row(0).adjoint(), r2 = r.row(1).adjoint();
        // Brute-force inverse of I + c r2 r2^H.
        const CMatrix B = CMatrix::Identity(8, 8) + c * r2 * r2.adjoint();
        const CVector oracle = B.inverse() * r1;
        // Sherman-Morrison shape.
        const CVector sm = r1 - (c * r2.dot(r1) / (1.0 + c * r2.squaredNorm())) * r2;
        const CVector f = ge_beam(0, r, eta);
        EXPECT_NEAR(alignment(f, oracle), 1.0, 1e-10);
        EXPECT_NEAR(alignment(f, sm), 1.0, 1e-10);
    }
}

TEST(Ge, LargeWeightsApproachZf)
{
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        const CMatrix r = random_matrix(2, 16, rng);
        const auto zf = zf_beams(r);
        const auto ge = ge_beams(r, uniform_eta(2, 1e6));
        for (int k = 0; k < 2; ++k)
            EXPECT_GE(alignment(ge.beams[k], zf.beams[k]), 0.999);
    }
}

TEST(Ge, UniformEtaAndErrors)
{
    const RMatrix eta = uniform_eta(3, 2.5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            EXPECT_EQ(eta(i, j), i == j ? 0.0 : 2.5);
    Rng rng(8);
    const CMatrix r = random_matrix(2, 4, rng);
    EXPECT_THROW(ge_beam(2, r, uniform_eta(2, 1)), DimensionMismatch);
    EXPECT_THROW(ge_beam(0, r, uniform_eta(3, 1)), DimensionMismatch);
    EXPECT_THROW(ge_beam(0, r, uniform_eta(2, -1)), OutOfRange);
}

TEST(QuantizePrecoder, PassThroughAndGrid)
{
    Rng rng(9);
    PrecoderSet p;
    p.scheme = Scheme::zf;
    p.beams = {random_unit(64, rng), random_unit(64, rng)};
    const auto same = quantize_precoder(p, BeamQuantSpec{});
    for (int k = 0; k < 2; ++k)
        EXPECT_LT((same.beams[k] - p.beams[k]).norm(), 1e-15);

    const auto q = quantize_precoder(p, beam_preset_b4());
    EXPECT_TRUE(q.quantized);
    EXPECT_EQ(q.scheme, Scheme::zf);
    for (const auto &b : q.beams)
        EXPECT_LE(b.squaredNorm(), 1.0);
    EXPECT_LE(q.total_power(), 2.0);

    const auto tx = codebook_preset("bs8");
    PrecoderSet s;
    s.beams = {tx[2]};
    const auto qs = quantize_precoder(s, beam_preset_b4());
    const double level = std::pow(10.0, -1.0 / 20.0) / 8.0;
    for (Eigen::Index i = 0; i < 64; ++i)
        EXPECT_NEAR(std::abs(qs.beams[0](i)), level, 1e-14);
}

TEST(Scheme, Names)
{
    for (auto s : {Scheme::steer, Scheme::zf, Scheme::ge, Scheme::scalar_ub, Scheme::alt_opt,
                   Scheme::mrt_mrc_zf})
        EXPECT_EQ(parse_scheme(to_string(s)), s);
    EXPECT_THROW(parse_scheme("mmse"), ConfigError);
}
