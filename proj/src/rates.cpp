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

#include "mubeam/rates.hpp"

#include <cmath>
#include <numeric>

namespace mubeam {

double sinr(const CMatrix &H_k, std::span<const CVector> beams, const CVector &g_k, double rho,
            int k)
{
    const int K = static_cast<int>(beams.size());
    if (k < 0 || k >= K)
        throw OutOfRange("sinr: user index out of range");
    if (H_k.rows() != g_k.size())
        throw DimensionMismatch("sinr: receive beam does not match channel");
    const CRowVector eff = g_k.adjoint() * H_k;
    const double s = rho / K;
    double signal = 0.0;
    double interference = 0.0;
    for (int m = 0; m < K; ++m) {
        if (beams[static_cast<std::size_t>(m)].size() != H_k.cols())
            throw DimensionMismatch("sinr: beam does not match channel");
        const double p = std::norm((eff * beams[static_cast<std::size_t>(m)]).value());
        (m == k ? signal : interference) += p;
    }
    return s * signal / (1.0 + s * interference);
}

std::vector<double> user_rates(std::span<const CMatrix> H, std::span<const CVector> beams,
                               std::span<const CVector> g, double rho)
{
    if (H.size() != beams.size() || g.size() != beams.size())
        throw DimensionMismatch("user_rates: channel, beam and receiver counts differ");
    std::vector<double> r(beams.size());
    for (std::size_t k = 0; k < beams.size(); ++k)
        r[k] = std::log2(1.0 + sinr(H[k], beams, g[k], rho, static_cast<int>(k)));
    return r;
}

double sum_rate(std::span<const CMatrix> H, std::span<const CVector> beams,
                std::span<const CVector> g, double rho)
{
    const auto r = user_rates(H, beams, g, rho);
    return std::accumulate(r.begin(), r.end(), 0.0);
}

} // namespace mubeam
