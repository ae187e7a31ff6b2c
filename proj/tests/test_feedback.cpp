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

#include <algorithm>
#include <numeric>

#include "mubeam/alignment.hpp"
#include "mubeam/codebook.hpp"
#include "mubeam/feedback.hpp"
#include "test_helpers.hpp"

using namespace mubeam;
using namespace mubeam::testing;

namespace {

Codebook dft_tx() { return build_dft_codebook({8, 2}); }
Codebook dft_rx() { return build_dft_codebook({2, 2}); }

FeedbackQuantSpec infinite() { return FeedbackQuantSpec{}; }

} // namespace

TEST(SweepSnr, AlignedRankOne)
{
    const auto tx = dft_tx(), rx = build_steered_codebook({2, 2}, default_aoa_sector(), 4, 4);
    const double scale = std::sqrt(double(tx.geom.size() * rx.geom.size()));
    const CMatrix H = scale * rx[3] * tx[5].adjoint();
    const SnrTable t = sweep_snr(H, tx, rx);
    Eigen::Index mi = 0, ni = 0;
    t.maxCoeff(&mi, &ni);
    EXPECT_EQ(mi, 3);
    EXPECT_EQ(ni, 5);
    EXPECT_NEAR(t(3, 5), 64.0, 1e-10);
    for (int m = 0; m < rx.size(); ++m)
        EXPECT_NEAR(t(m, 5), std::norm(rx[m].dot(rx[3])) * 64.0, 1e-10);
    for (int n = 0; n < tx.size(); ++n)
        if (n != 5)
            EXPECT_NEAR(t(3, n), 0.0, 1e-10);
}

TEST(SweepSnr, ZeroAndScaling)
{
    const auto tx = dft_tx(), rx = dft_rx();
    EXPECT_EQ(sweep_snr(CMatrix::Zero(4, 16), tx, rx).maxCoeff(), 0.0);
    Rng rng(1);
    const CMatrix H = random_matrix(4, 16, rng);
    const SnrTable a = sweep_snr(H, tx, rx), b = sweep_snr(3.0 * H, tx, rx);
    EXPECT_LT((b - 9.0 * a).norm(), 1e-10 * b.norm());
    EXPECT_THROW(sweep_snr(CMatrix::Zero(4, 15), tx, rx), DimensionMismatch);
}

TEST(TopPairs, GreedyDistinctTransmitBeams)
{
    SnrTable t = SnrTable::Zero(2, 2);
    t(0, 0) = 9;
    t(1, 0) = 8;
    t(0, 1) = 4;
    const auto p = top_pairs(t, 2);
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p[0].m, 0);
    EXPECT_EQ(p[0].n, 0);
    EXPECT_EQ(p[0].snr, 9);
    EXPECT_EQ(p[1].m, 0);
    EXPECT_EQ(p[1].n, 1);
    EXPECT_EQ(p[1].snr, 4);
}

TEST(TopPairs, ArgmaxAndTies)
{
    Rng rng(3);
    SnrTable t = random_matrix(5, 7, rng).cwiseAbs2();
    Eigen::Index mi = 0, ni = 0;
    t.maxCoeff(&mi, &ni);
    const auto p = top_pairs(t, 1);
    EXPECT_EQ(p[0].m, mi);
    EXPECT_EQ(p[0].n, ni);

    const auto q = top_pairs(SnrTable::Constant(3, 4, 2.0), 4);
    for (int l = 0; l < 4; ++l) {
        EXPECT_EQ(q[l].m, 0);
        EXPECT_EQ(q[l].n, l);
    }
    EXPECT_THROW(top_pairs(t, 0), OutOfRange);
    EXPECT_THROW(top_pairs(t, 8), OutOfRange);
}

TEST(TopPairs, PermutationCovariant)
{
    Rng rng(5);
    const SnrTable t = random_matrix(4, 6, rng).cwiseAbs2();
    std::vector<int> pm{2, 0, 3, 1}, pn{5, 3, 1, 0, 4, 2};
    SnrTable s(4, 6);
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 6; ++n)
            s(pm[m], pn[n]) = t(m, n);
    const auto a = top_pairs(t, 4), b = top_pairs(s, 4);
    for (int l = 0; l < 4; ++l) {
        EXPECT_EQ(pm[a[l].m], b[l].m);
        EXPECT_EQ(pn[a[l].n], b[l].n);
    }
}

TEST(PairPhase, Noiseless)
{
    Rng rng(1);
    CMatrix H(1, 1);
    const CVector one = CVector::Ones(1);
    H(0, 0) = -2.0;
    EXPECT_NEAR(estimate_pair_phase(H, one, one, 1.0, rng, true), kPi, 1e-15);
    H(0, 0) = cd(1.0, 1.0);
    EXPECT_NEAR(estimate_pair_phase(H, one, one, 1.0, rng, true), kPi / 4, 1e-15);
}

TEST(PairPhase, HighSnrConverges)
{
    Rng rng(12);
    CMatrix H(1, 1);
    H(0, 0) = std::polar(1.0, 0.8);
    const CVector one = CVector::Ones(1);
    int good = 0;
    for (int t = 0; t < 1000; ++t)
        good += circular_distance(estimate_pair_phase(H, one, one, 1e6, rng, false), 0.8) < 0.01;
    EXPECT_GE(good, 990);
}

TEST(Report, SingleRow)
{
    Rng rng(2);
    const auto tx = codebook_preset("bs8"), rx = codebook_preset("ue16");
    const CMatrix H = random_matrix(4, 64, rng);
    const auto rep = build_report(H, tx, rx, 1, 10.0, heuristic_feedback_spec(1), rng);
    ASSERT_EQ(rep.P(), 1);
    EXPECT_EQ(rep.rows[0].rel_phase, 0.0);
    EXPECT_EQ(rep.rows[0].rel_corr_phase, 0.0);
    EXPECT_EQ(rep.rows[0].mu, 1.0);
}

TEST(Report, AlignedSinglePath)
{
    const auto tx = dft_tx(), rx = dft_rx();
    const double scale = std::sqrt(double(tx.geom.size() * rx.geom.size()));
    const CMatrix H = scale * rx[1] * tx[6].adjoint();
    Rng rng(3);
    const auto rep = build_report(H, tx, rx, 1, 10.0, infinite(), rng, true);
    EXPECT_EQ(rep.g_rx, 1);
    EXPECT_EQ(rep.rows[0].n_idx, 6);
    EXPECT_NEAR(rep.rows[0].gamma, scale, 1e-10);
    EXPECT_NEAR(rep.rows[0].mu, 1.0, 1e-12);
}

TEST(Report, DeterministicAndTruncation)
{
    const auto tx = codebook_preset("bs32"), rx = codebook_preset("ue16");
    Rng a(4), b(4), c(9);
    const CMatrix H = random_matrix(4, 64, c);
    const auto r1 = build_report(H, tx, rx, 4, 10.0, heuristic_feedback_spec(4), a);
    const auto r2 = build_report(H, tx, rx, 4, 10.0, heuristic_feedback_spec(4), b);
    EXPECT_EQ(to_json(r1), to_json(r2));
    const auto t2 = truncated(r1, 2);
    ASSERT_EQ(t2.P(), 2);
    EXPECT_EQ(t2.rows[1].n_idx, r1.rows[1].n_idx);
    EXPECT_THROW(truncated(r1, 5), OutOfRange);
    const auto back = report_from_json(to_json(r1));
    EXPECT_EQ(to_json(back), to_json(r1));
}

TEST(Reconstruct, SingleTerm)
{
    const auto tx = codebook_preset("bs8");
    BeamReport rep;
    rep.rows.push_back({5, 3.5, 0.0, 1.0, 0.0});
    const CRowVector row = reconstruct_row(rep, tx);
    EXPECT_LT((row - 3.5 * tx[5].adjoint()).norm(), 1e-14);
    rep.rows[0].n_idx = 8;
    EXPECT_THROW(reconstruct_row(rep, tx), BadIndex);
}

TEST(Reconstruct, TwoTermOracle)
{
    const auto tx = codebook_preset("bs16");
    BeamReport rep;
    rep.rows.push_back({2, 4.0, 0.0, 1.0, 0.0});
    rep.rows.push_back({9, 2.0, 0.7, 0.6, -0.2});
    CRowVector expect = 4.0 * tx[2].adjoint();
    expect += 0.6 * 2.0 * std::exp(cd(0, 0.5)) * tx[9].adjoint();
    EXPECT_LT((reconstruct_row(rep, tx) - expect).norm(), 1e-13);
}

namespace {

// Relative error after removing the best common phase.
double phase_free_error(const CRowVector &a, const CRowVector &b)
{
    const cd c = b.dot(a); // sum conj(b) a
    const cd ph = std::abs(c) > 0 ? c / std::abs(c) : cd(1.0);
    return (a - ph * b).norm() / b.norm();
}

} // namespace

TEST(Reconstruct, AlignedSinglePathExact)
{
    const auto tx = dft_tx(), rx = dft_rx();
    const double scale = std::sqrt(double(tx.geom.size() * rx.geom.size()));
    const CMatrix H = scale * rx[2] * tx[11].adjoint();
    Rng rng(1);
    const auto rep = build_report(H, tx, rx, 1, 10.0, infinite(), rng, true);
    const CRowVector truth = rx[rep.g_rx].adjoint() * H;
    EXPECT_LE(phase_free_error(reconstruct_row(rep, tx), truth), 1e-9);
}

TEST(Reconstruct, MultiPathExact)
{
    const auto tx = dft_tx(), rx = build_steered_codebook({2, 2}, default_aoa_sector(), 4, 4);
    Rng rng(77);
    std::uniform_int_distribution<int> pick_m(0, rx.size() - 1);
    for (int t = 0; t < 200; ++t) {
        const int P = 1 + t % 4;
        const int m = pick_m(rng);
        std::vector<int> ns(static_cast<std::size_t>(tx.size()));
        std::iota(ns.begin(), ns.end(), 0);
        std::shuffle(ns.begin(), ns.end(), rng);
        CMatrix H = CMatrix::Zero(rx.geom.size(), tx.geom.size());
        for (int l = 0; l < P; ++l)
            H += complex_normal(rng) * rx[m] * tx[ns[l]].adjoint();
        const auto rep = build_report(H, tx, rx, P, 10.0, infinite(), rng, true);
        const CRowVector truth = rx[rep.g_rx].adjoint() * H;
        EXPECT_LE(phase_free_error(reconstruct_row(rep, tx), truth), 1e-9) << "trial " << t;
    }
}

TEST(FeedbackBits, HeuristicTable)
{
    const std::vector<int> Ns{4, 8, 16, 32};
    const std::vector<int> p2{14, 16, 18, 20}, p4{44, 48, 52, 56};
    for (std::size_t i = 0; i < Ns.size(); ++i) {
        EXPECT_EQ(feedback_bits(2, Ns[i], heuristic_feedback_spec(2)), p2[i]);
        EXPECT_EQ(feedback_bits(4, Ns[i], heuristic_feedback_spec(4)), p4[i]);
    }
}

TEST(FeedbackBits, DegenerateAndErrors)
{
    const auto fq = heuristic_feedback_spec(1);
    EXPECT_EQ(feedback_bits(1, 16, fq), 4 + *fq.snr_bits + *fq.corr_amp_bits);
    EXPECT_THROW(feedback_bits(2, 8, infinite()), OutOfRange);
    EXPECT_THROW(feedback_bits(0, 8, fq), OutOfRange);
}
