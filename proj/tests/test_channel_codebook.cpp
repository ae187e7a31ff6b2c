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

#include "mubeam/channel.hpp"
#include "mubeam/codebook.hpp"
#include "test_helpers.hpp"

using namespace mubeam;

namespace {
constexpr double kDeg = kPi / 180.0;
}

TEST(SteeringVector, Broadside)
{
    const CVector v = steering_vector({2, 1}, 0.0, kPi / 2);
    EXPECT_NEAR(std::abs(v(0) - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(v(1) - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(SteeringVector, AzimuthRamp)
{
    const CVector v = steering_vector({2, 1}, kPi / 6, kPi / 2);
    EXPECT_NEAR(std::abs(v(1) - std::polar(1.0 / std::sqrt(2.0), kPi / 2)), 0.0, 1e-15);
}

TEST(SteeringVector, VerticalPairAtHorizon)
{
    for (double az : {-1.0, 0.0, 0.7}) {
        const CVector v = steering_vector({1, 2}, az, kPi / 2);
        EXPECT_NEAR(std::abs(v(1) - v(0)), 0.0, 1e-15);
    }
}

TEST(SteeringVector, FlatIndexAndNorm)
{
    const ArrayGeometry g{3, 2};
    const double az = 0.3, zen = 1.2;
    const CVector v = steering_vector(g, az, zen);
    EXPECT_NEAR(v.norm(), 1.0, 1e-14);
    const cd expect = std::polar(1.0 / std::sqrt(6.0),
                                 kPi * (2 * std::sin(zen) * std::sin(az) + std::cos(zen)));
    EXPECT_NEAR(std::abs(v(1 * 3 + 2) - expect), 0.0, 1e-14);
    EXPECT_THROW(steering_vector({0, 2}, 0, 0), DimensionMismatch);
}

TEST(Channel, SinglePathRankOne)
{
    const ArrayGeometry tx{16, 4}, rx{2, 2};
    const ClusterParams c{cd(1.0, 0.0), 0.2, 1.5, -0.4, 1.1};
    const CMatrix H = assemble_channel(tx, rx, {c});
    const CMatrix expect = std::sqrt(64.0 * 4.0) * steering_vector(rx, c.aoa_az, c.aoa_zen) *
                           steering_vector(tx, c.aod_az, c.aod_zen).adjoint();
    EXPECT_LT((H - expect).norm(), 1e-12);
    EXPECT_NEAR(H.norm(), 16.0, 1e-12);
    const Eigen::JacobiSVD<CMatrix> svd(H);
    EXPECT_LT(svd.singularValues()(1), 1e-10);
}

TEST(Channel, AnglesStayInsideSectors)
{
    Rng rng(3);
    const auto aod = default_aod_sector(), aoa = default_aoa_sector();
    for (int t = 0; t < 200; ++t) {
        const auto ch = draw_channel({16, 4}, {2, 2}, 6, aod, aoa, rng);
        ASSERT_EQ(ch.clusters.size(), 6u);
        for (const auto &c : ch.clusters) {
            EXPECT_GE(c.aod_az, aod.az_min);
            EXPECT_LE(c.aod_az, aod.az_max);
            EXPECT_GE(c.aod_zen, aod.zen_min);
            EXPECT_LE(c.aod_zen, aod.zen_max);
            EXPECT_GE(c.aoa_zen, aoa.zen_min);
            EXPECT_LE(c.aoa_zen, aoa.zen_max);
        }
        EXPECT_LT((ch.H - assemble_channel(ch.tx, ch.rx, ch.clusters)).norm(), 1e-12);
    }
}

TEST(Channel, PowerNormalization)
{
    Rng rng(2024);
    double acc = 0.0;
    const int draws = 2000;
    for (int t = 0; t < draws; ++t) {
        const auto ch = draw_channel({16, 4}, {2, 2}, 6, default_aod_sector(),
                                     default_aoa_sector(), rng);
        acc += ch.H.squaredNorm() / (64.0 * 4.0);
    }
    const double mean = acc / draws;
    EXPECT_GE(mean, 0.95);
    EXPECT_LE(mean, 1.05);
}

TEST(Channel, Deterministic)
{
    Rng a(77), b(77);
    const auto c1 = draw_channel({16, 4}, {2, 2}, 6, default_aod_sector(), default_aoa_sector(), a);
    const auto c2 = draw_channel({16, 4}, {2, 2}, 6, default_aod_sector(), default_aoa_sector(), b);
    EXPECT_TRUE(c1.H == c2.H);
}

TEST(Channel, RejectsBadInput)
{
    Rng rng(1);
    EXPECT_THROW(draw_channel({16, 4}, {2, 2}, 0, default_aod_sector(), default_aoa_sector(), rng),
                 OutOfRange);
    SectorSpec bad{0.5, 0.1, 1.0, 2.0};
    EXPECT_THROW(draw_channel({16, 4}, {2, 2}, 2, bad, default_aoa_sector(), rng), OutOfRange);
}

TEST(Codebook, SingleBeamAtSectorCenter)
{
    const SectorSpec s{-60 * kDeg, 60 * kDeg, 75 * kDeg, 105 * kDeg};
    const auto cb = build_steered_codebook({16, 4}, s, 1, 1);
    ASSERT_EQ(cb.size(), 1);
    // Center in sine/cosine coordinates: sin(az) = 0, cos(zen) = 0.
    EXPECT_LT((cb[0] - steering_vector({16, 4}, 0.0, kPi / 2)).norm(), 1e-14);
}

TEST(Codebook, GridOrderingAndNorm)
{
    const auto cb = build_steered_codebook({16, 4}, default_aod_sector(), 8, 4);
    ASSERT_EQ(cb.size(), 32);
    for (int i = 0; i < cb.size(); ++i)
        EXPECT_NEAR(cb[i].norm(), 1.0, 1e-12);
    // Azimuth varies fastest.
    EXPECT_LT(cb.ux[0], cb.ux[1]);
    EXPECT_DOUBLE_EQ(cb.uz[0], cb.uz[7]);
    EXPECT_LT(cb.uz[0], cb.uz[8]);
}

TEST(Codebook, Bs32GramMatrix)
{
    const auto cb = codebook_preset(CodebookPreset::bs32);
    const CMatrix G = cb.matrix().adjoint() * cb.matrix();
    for (int i = 0; i < cb.size(); ++i) {
        if (i + 1 < cb.size())
            EXPECT_LT(std::abs(G(i, i + 1)), 1.0);
        int best = 0;
        for (int j = 0; j < cb.size(); ++j)
            if (std::abs(G(i, j)) > std::abs(G(i, best)))
                best = j;
        EXPECT_EQ(best, i);
    }
}

TEST(Codebook, Presets)
{
    const std::vector<std::pair<CodebookPreset, int>> sizes{
        {CodebookPreset::bs4, 4},   {CodebookPreset::bs8, 8},  {CodebookPreset::bs16, 16},
        {CodebookPreset::bs32, 32}, {CodebookPreset::bs256, 256}, {CodebookPreset::ue4, 4},
        {CodebookPreset::ue16, 16}};
    for (auto [p, n] : sizes) {
        const auto cb = codebook_preset(p);
        EXPECT_EQ(cb.size(), n) << to_string(p);
        EXPECT_EQ(cb.name, to_string(p));
        for (int i = 0; i < cb.size(); ++i)
            EXPECT_NEAR(cb[i].squaredNorm(), 1.0, 1e-12);
    }
    EXPECT_EQ(codebook_preset("bs32").geom, (ArrayGeometry{16, 4}));
    EXPECT_EQ(codebook_preset("ue16").geom, (ArrayGeometry{2, 2}));
    EXPECT_THROW(codebook_preset("bs7"), UnknownPreset);
}

TEST(Codebook, DftIsOrthonormal)
{
    const auto cb = build_dft_codebook({8, 2});
    const CMatrix G = cb.matrix().adjoint() * cb.matrix();
    EXPECT_LT((G - CMatrix::Identity(16, 16)).norm(), 1e-12);
}

namespace {

// min over a 1 degree grid of the sector of the best beam's array gain.
double worst_case_gain(const Codebook &cb)
{
    const auto &s = cb.sector;
    const CMatrix F = cb.matrix();
    const double n = cb.geom.size();
    double worst = std::numeric_limits<double>::infinity();
    const int n_az = static_cast<int>(std::lround((s.az_max - s.az_min) / kDeg));
    const int n_zen = static_cast<int>(std::lround((s.zen_max - s.zen_min) / kDeg));
    for (int i = 0; i <= n_az; ++i)
        for (int j = 0; j <= n_zen; ++j) {
            const CVector v = steering_vector(cb.geom, s.az_min + i * kDeg, s.zen_min + j * kDeg);
            worst = std::min(worst, n * (F.adjoint() * v).cwiseAbs2().maxCoeff());
        }
    return worst;
}

} // namespace

TEST(Codebook, WorstCaseCoverageShrinksWithSize)
{
    double prev = 0.0;
    for (auto p : {CodebookPreset::bs4, CodebookPreset::bs8, CodebookPreset::bs16,
                   CodebookPreset::bs32, CodebookPreset::bs256}) {
        const double w = worst_case_gain(codebook_preset(p));
        EXPECT_GT(w, 0.0) << to_string(p);
        EXPECT_GT(w, prev) << to_string(p);
        prev = w;
    }
    const double ue4 = worst_case_gain(codebook_preset(CodebookPreset::ue4));
    const double ue16 = worst_case_gain(codebook_preset(CodebookPreset::ue16));
    EXPECT_GT(ue4, 0.0);
    EXPECT_GT(ue16, ue4);
}
